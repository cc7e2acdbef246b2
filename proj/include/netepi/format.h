/*
* Copyright (C) 2026 netepi contributors
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
#ifndef NETEPI_FORMAT_H
#define NETEPI_FORMAT_H

#include <optional>
#include <string>
#include <string_view>

namespace netepi
{

/// Shortest decimal text that parses back to the same double.
std::string format_shortest(double value);

/// printf-style "%.17g".
std::string format_g17(double value);

/// Parses a whole token as a double; nullopt on any trailing garbage.
std::optional<double> parse_double(std::string_view token);

/// Parses a whole token as a non-negative integer.
std::optional<long long> parse_integer(std::string_view token);

std::string_view trim(std::string_view text);

} // namespace netepi

#endif // NETEPI_FORMAT_H
