// Copyright (C) 2026 The corredit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include <cstdint>
#include <string>
#include <vector>

namespace corredit {

// H x W x C floating grid in [0, 1], row-major, channel-interleaved.
// The pixel-space carrier for inputs, synthetic benchmarks and outputs.
struct ImageBuf {
    int height = 0;
    int width = 0;
    int channels = 0;  // 1 or 3
    std::vector<float> data;

    ImageBuf() = default;
    ImageBuf(int h, int w, int c, float fill = 0.0f)
        : height(h), width(w), channels(c), data(static_cast<size_t>(h) * w * c, fill) {}

    float& at(int y, int x, int c) {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }
    float at(int y, int x, int c) const {
        return data[(static_cast<size_t>(y) * width + x) * channels + c];
    }

    size_t size() const { return data.size(); }
    bool empty() const { return data.empty(); }
};

// Throws ShapeError if dimensions/channels/data length disagree or any value
// is non-finite or outside [0, 1].
void validate_image(const ImageBuf& img);

// Rec.601 luma; pass-through for single-channel images.
float luma(const ImageBuf& img, int y, int x);
ImageBuf to_gray(const ImageBuf& img);

// Bilinear sample of channel c at continuous coordinates, edge-clamped.
float sample_bilinear(const ImageBuf& img, float x, float y, int c);

// Box-filtered resize (used for pyramid levels and mask downsampling).
ImageBuf resize_box(const ImageBuf& img, int out_h, int out_w);

// 8-bit quantization used both for file output and for canonical hashing.
inline uint8_t quantize8(float v) {
    float q = v * 255.0f + 0.5f;
    if (q < 0.0f) q = 0.0f;
    if (q > 255.0f) q = 255.0f;
    return static_cast<uint8_t>(q);
}

// File I/O. Format chosen by extension: .ppm/.pgm or .png.
// Loaded pixels are normalized to [0, 1]; errors raise IoError.
ImageBuf load_image(const std::string& path);
void save_image(const ImageBuf& img, const std::string& path);

ImageBuf load_ppm(const std::string& path);
void save_ppm(const ImageBuf& img, const std::string& path);
ImageBuf load_png(const std::string& path);
void save_png(const ImageBuf& img, const std::string& path);

// Grayscale P5 export for attention heatmaps; values scaled so the map
// maximum lands on 255.
void save_pgm_normalized(const std::vector<double>& values, int h, int w, const std::string& path);

}  // namespace corredit
