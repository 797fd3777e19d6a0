/*
 * Copyright 2026 The rclkit Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     https://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

// Subcommands of the rclkit tool.

#pragma once

#include <ostream>

namespace rclkit::cli {

/// Runs the tool with the given arguments. Reports go to `out`,
/// diagnostics to `err`. Returns 0 on success, 1 when the input is
/// invalid or a check fails, 2 on malformed input or usage errors.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace rclkit::cli
