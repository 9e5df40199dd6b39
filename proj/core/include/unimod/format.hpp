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

#ifndef UNIMOD_FORMAT_HPP
#define UNIMOD_FORMAT_HPP

#include <cstdio>
#include <string>

namespace unimod {

/// Floats are printed with 17 significant digits everywhere (JSON, CSV,
/// stdout) so that golden files round-trip exactly.
inline std::string g17(double v) {
  char buf[40];
  std::snprintf(buf, sizeof buf, "%.17g", v);
  return buf;
}

}  // namespace unimod

#endif  // UNIMOD_FORMAT_HPP
