// Copyright (C) 2026 The corredit authors
// SPDX-License-Identifier: Apache-2.0

#pragma once

namespace corredit {

inline const char* version() { return "0.1.0"; }

}  // namespace corredit
