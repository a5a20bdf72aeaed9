/*
 * Copyright 2026 The drinfeld-heights Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */
#pragma once

#include <ostream>
#include <string>

#include "config.hpp"

namespace drinfeld::cli {

enum class Format { Human, Json, Csv };

enum ExitCode : int {
    kSuccess = 0,
    kUsageError = 1,
    kUncertified = 2,
    kInternalMismatch = 3,
};

int cmd_height(const RunConfig& cfg, Format fmt, std::ostream& out);
int cmd_torsion_order(const RunConfig& cfg, Format fmt, std::ostream& out);
int cmd_average(const RunConfig& cfg, Format fmt, std::ostream& out);
int cmd_siegel(const RunConfig& cfg, Format fmt, std::ostream& out);
int cmd_schinzel(const RunConfig& cfg, Format fmt, std::ostream& out);
int cmd_reduce(const RunConfig& cfg, Format fmt, std::ostream& out);
int cmd_factor(const RunConfig& cfg, Format fmt, std::ostream& out);

/// Dispatches by subcommand name and maps exceptions to exit codes, writing
/// error messages to err.
int run_command(const std::string& name, const RunConfig& cfg, Format fmt, std::ostream& out, std::ostream& err);

}  // namespace drinfeld::cli
