// Copyright 2026 The lightcone Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "lightcone/error.hpp"

namespace lightcone {

std::string_view category_name(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::invalid_input:
            return "invalid_input";
        case ErrorCategory::resource:
            return "resource";
        case ErrorCategory::no_constant:
            return "no_constant";
        case ErrorCategory::io:
            return "io";
    }
    return "unknown";
}

int exit_code(ErrorCategory category) {
    switch (category) {
        case ErrorCategory::invalid_input:
            return 2;
        case ErrorCategory::resource:
            return 3;
        case ErrorCategory::no_constant:
            return 4;
        case ErrorCategory::io:
            return 5;
    }
    return 1;
}

}  // namespace lightcone
