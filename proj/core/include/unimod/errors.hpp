// Copyright 2026 The unimod authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     https://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef UNIMOD_ERRORS_HPP
#define UNIMOD_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace unimod {

// Thrown when a numeric routine cannot certify its result (root isolation,
// solver convergence). Distinct from std::invalid_argument, which is used
// for malformed inputs.
class numeric_error : public std::runtime_error {
 public:
  explicit numeric_error(const std::string& what) : std::runtime_error(what) {}
};

}  // namespace unimod

#endif  // UNIMOD_ERRORS_HPP
