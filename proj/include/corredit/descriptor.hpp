// Copyright (C) 2026 The corredit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <vector>

#include "corredit/image.hpp"

namespace corredit {

struct DescriptorConfig {
    int num_levels = 3;       // pyramid depth, resolutions halve per level
    int patch_radius = 2;     // 5x5 normalized intensity patch
    int hist_radius = 3;      // gradient-orientation window
    int hist_bins = 8;
    float bias_weight = 0.25f;  // constant component keeping flat patches at unit norm

    bool operator==(const DescriptorConfig&) const = default;

    int patch_dims() const { return (2 * patch_radius + 1) * (2 * patch_radius + 1); }
    int dims() const { return patch_dims() + hist_bins + 1; }
    int min_image_side() const;
};

// One pyramid level: a gray image at `scale` relative to the input, plus a
// per-pixel descriptor grid (h*w rows of `dims` floats, L2-normalized).
struct DescriptorLevel {
    float scale = 1.0f;
    int height = 0;
    int width = 0;
    int dims = 0;
    std::vector<float> desc;  // h*w*dims

    const float* at(int y, int x) const {
        return desc.data() + (static_cast<size_t>(y) * width + x) * dims;
    }
};

struct DescriptorPyramid {
    DescriptorConfig cfg;
    std::vector<DescriptorLevel> levels;  // levels[0] = full resolution
};

// Multi-scale classical descriptors: mean-centered normalized patch
// intensities concatenated with a gradient-orientation histogram and a small
// constant component, L2-normalized.  Stands behind the extractor interface
// so a learned extractor can be swapped in later.
// Throws ParameterError when the image is smaller than the largest window.
DescriptorPyramid compute_descriptors(const ImageBuf& image, const DescriptorConfig& cfg);

// Instrumentation: number of compute_descriptors calls since reset
// (observable cache-hit contract).
long descriptor_call_count();
void reset_corr_stats();

}  // namespace corredit
