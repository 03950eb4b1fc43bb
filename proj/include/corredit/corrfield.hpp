// Copyright (C) 2026 The corredit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <string>
#include <vector>

namespace corredit {

// Dense target -> source coordinate map with validity mask and confidence.
// Cell (y, x) in the target frame maps to continuous source coordinates
// (src_x, src_y).  Source and target grids have the same resolution.
// Invalid cells carry confidence 0 and are ignored by every consumer.
struct CorrField {
    int height = 0;
    int width = 0;
    std::vector<float> src_x;       // h*w
    std::vector<float> src_y;       // h*w
    std::vector<uint8_t> valid;     // h*w, 0/1
    std::vector<float> confidence;  // h*w in [0,1]

    CorrField() = default;
    CorrField(int h, int w)
        : height(h),
          width(w),
          src_x(static_cast<size_t>(h) * w, 0.0f),
          src_y(static_cast<size_t>(h) * w, 0.0f),
          valid(static_cast<size_t>(h) * w, 0),
          confidence(static_cast<size_t>(h) * w, 0.0f) {}

    size_t idx(int y, int x) const { return static_cast<size_t>(y) * width + x; }
    size_t cells() const { return static_cast<size_t>(height) * width; }

    void set(int y, int x, float sx, float sy, float conf) {
        const size_t i = idx(y, x);
        src_x[i] = sx;
        src_y[i] = sy;
        valid[i] = 1;
        confidence[i] = conf;
    }
    void invalidate(int y, int x) {
        const size_t i = idx(y, x);
        valid[i] = 0;
        confidence[i] = 0.0f;
    }
    bool is_valid(int y, int x) const { return valid[idx(y, x)] != 0; }

    double valid_fraction() const;

    // Identity field: every cell maps to itself with confidence 1.
    static CorrField identity(int h, int w);
};

// Versioned little-endian binary ("ECF1"): magic, version, height, width,
// then per-cell records (src_x f32, src_y f32, confidence f32, valid u8).
std::vector<uint8_t> serialize_corrfield(const CorrField& f);
CorrField deserialize_corrfield(const uint8_t* data, size_t size);

void save_corrfield(const CorrField& f, const std::string& path);
CorrField load_corrfield(const std::string& path);

// JSON debug dump (pretty-printed, one record per valid cell).
std::string corrfield_debug_json(const CorrField& f);

// Fraction of gt-valid cells where pred is valid and within threshold_px
// (Euclidean) of gt.  Throws MetricError when gt has no valid cells,
// ShapeError on resolution mismatch.
double pck(const CorrField& pred, const CorrField& gt, double threshold_px);

// Keeps a cell of corr_ij valid only if following corr_ij into the source
// frame and then corr_ji back lands within round_trip_tol_px of the start.
// Never adds validity.
CorrField cyclic_filter(const CorrField& corr_ij, const CorrField& corr_ji,
                        double round_trip_tol_px);

// Reduces a field to a coarser grid.  An output cell is valid when at least
// half of the input cells it covers are valid; it then adopts the offset of
// the valid input cell nearest the region center, scaled by (out/in), so
// constant-offset fields downsample to exactly scaled constant offsets.
CorrField downsample_corr(const CorrField& corr, int out_h, int out_w);

}  // namespace corredit
