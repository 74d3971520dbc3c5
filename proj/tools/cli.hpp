/*******************************************************************************
 * Copyright (c) 2026 The lincodes authors.                                    *
 * All rights reserved.                                                        *
 *                                                                             *
 * This source code and the accompanying materials are made available under    *
 * the terms of the Apache License 2.0 which accompanies this distribution.    *
 ******************************************************************************/
#pragma once

#include <iosfwd>
#include <string>
#include <vector>

namespace lincodes::cli {

inline constexpr int kExitOk = 0;
inline constexpr int kExitUsage = 1;
inline constexpr int kExitViolation = 2;

/// Environment variable naming the default output directory of
/// `ensemble build`.
inline constexpr const char *kOutDirEnv = "LINCODES_OUT_DIR";

/// Runs one subcommand. `args` excludes the program name.
int run(const std::vector<std::string> &args, std::ostream &out,
        std::ostream &err);

/// SHA-256 of a byte string, lowercase hex.
std::string sha256_hex(const std::string &bytes);

} // namespace lincodes::cli
