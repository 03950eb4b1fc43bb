// Copyright (C) 2026 The corredit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

#include "corredit/corrfield.hpp"
#include "corredit/descriptor.hpp"

namespace corredit {

struct MatchConfig {
    int refine_radius = 2;          // search window half-width at finer levels
    float confidence_threshold = 0.6f;
    int threads = 0;                // 0 = hardware default

    bool operator==(const MatchConfig&) const = default;
};

// Coarse-to-fine nearest-neighbor matching.  desc_i is the source pyramid,
// desc_j the target; the result maps every target cell to continuous source
// coordinates with confidence = cosine similarity of the matched descriptors.
// Cells below the confidence threshold are invalid.
// Throws ConfigError when the pyramids were built with different configs.
CorrField match_correspondence(const DescriptorPyramid& desc_i, const DescriptorPyramid& desc_j,
                               const MatchConfig& cfg);

// Instrumentation: matcher invocations since reset_corr_stats().
long match_call_count();

}  // namespace corredit
