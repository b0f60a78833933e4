/**
 * Copyright 2026 The absg2 Authors
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

#ifndef ABSG2_CLI_HPP
#define ABSG2_CLI_HPP

#include <iosfwd>
#include <string>
#include <string_view>
#include <vector>

#include "absg2/core.hpp"

namespace absg2::cli {

enum ExitCode : int { kOk = 0, kValidationFailed = 1, kUsage = 2, kIo = 3 };

/// Grid specifications: "start:stop:count" (linear, inclusive),
/// "log:start:stop:count" (geometric, inclusive), "a,b,c" or a single value.
std::vector<double> parse_grid_spec(std::string_view spec);

/// printf "%.9g" in the C locale.
std::string format_g9(double value);

struct SweepRow {
    PairKind pair;
    double x;
    double r;
    double visibility;
};

/// Analytic visibility over xs x rs, x-major. Points outside x > 0,
/// 0 < R < 1 are skipped; `skipped` receives their count.
std::vector<SweepRow> sweep_rows(PairKind pair, const std::vector<double>& xs, const std::vector<double>& rs,
                                 std::size_t* skipped = nullptr);

/// CSV text with header "pair,x,R,visibility" and LF line endings.
std::string sweep_csv(const std::vector<SweepRow>& rows);

/// Entry point shared by the executable and the tests.
int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace absg2::cli

#endif  // ABSG2_CLI_HPP
