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

#include "unimod/chebyshev.hpp"

#include <stdexcept>

namespace unimod {

AlgebraicPoly to_algebraic(const CosineSeries& series, const BigRat& shift) {
  if (series.is_constant() && series.constant() == shift)
    throw std::invalid_argument("to_algebraic: series - shift is identically zero");

  RatPoly acc{series.constant() - shift};
  if (!series.harmonics().empty()) {
    // walk the recurrence once up to the top frequency, accumulating as we go
    RatPoly t_prev{1};     // T_0
    RatPoly t_cur{0, 1};   // T_1
    size_t next = 0;
    const auto& hs = series.harmonics();
    for (int j = 1; j <= hs.back().frequency; ++j) {
      if (next < hs.size() && hs[next].frequency == j) {
        acc = add(acc, scale(t_cur, hs[next].amplitude));
        ++next;
      }
      if (j < hs.back().frequency) {
        RatPoly t_next = sub(scale(mul(RatPoly{0, 1}, t_cur), 2), t_prev);
        t_prev = std::move(t_cur);
        t_cur = std::move(t_next);
      }
    }
  }
  trim(acc);
  return AlgebraicPoly{std::move(acc)};
}

}  // namespace unimod
