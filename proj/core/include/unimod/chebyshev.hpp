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

#ifndef UNIMOD_CHEBYSHEV_HPP
#define UNIMOD_CHEBYSHEV_HPP

#include "unimod/cosine.hpp"
#include "unimod/exact.hpp"

namespace unimod {

/// Real-coefficient polynomial in x = cos t, monomial basis, obtained from a
/// cosine series via cos jt = T_j(cos t).
struct AlgebraicPoly {
  RatPoly coeffs;  // ascending degree, exact

  int degree() const { return unimod::degree(coeffs); }
  double operator()(double x) const { return eval(coeffs, x); }
};

/// Converts series(t) - shift into a polynomial p with p(cos t) = series(t) - shift
/// identically. Exact: the Chebyshev recurrence T_{j+1} = 2x T_j - T_{j-1} is
/// carried out in rational arithmetic (conversion coefficients grow as 2^j).
AlgebraicPoly to_algebraic(const CosineSeries& series, const BigRat& shift);

}  // namespace unimod

#endif  // UNIMOD_CHEBYSHEV_HPP
