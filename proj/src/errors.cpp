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
#include "netepi/errors.h"

namespace netepi
{

std::string_view to_string(ErrorCode code)
{
    switch (code) {
    case ErrorCode::EmptyInput:
        return "EmptyInput";
    case ErrorCode::MalformedLine:
        return "MalformedLine";
    case ErrorCode::NonpositiveWeight:
        return "NonpositiveWeight";
    case ErrorCode::IndexOutOfRange:
        return "IndexOutOfRange";
    case ErrorCode::DuplicateEdge:
        return "DuplicateEdge";
    case ErrorCode::ReducibleMatrix:
        return "ReducibleMatrix";
    case ErrorCode::DimensionMismatch:
        return "DimensionMismatch";
    case ErrorCode::InvalidArgument:
        return "InvalidArgument";
    case ErrorCode::BelowThreshold:
        return "BelowThreshold";
    case ErrorCode::NonConvergence:
        return "NonConvergence";
    case ErrorCode::InvariantViolation:
        return "InvariantViolation";
    case ErrorCode::NotANumber:
        return "NotANumber";
    }
    return "Unknown";
}

} // namespace netepi
