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

#ifndef UNIMOD_ISOLATE_HPP
#define UNIMOD_ISOLATE_HPP

#include <vector>

#include "unimod/exact.hpp"

namespace unimod {

/// A certified real root of a rational polynomial.
///
/// The root lies in [lo, hi] with hi - lo <= width_target (or lo == hi for
/// rational roots hit exactly during bisection). `value` is the double
/// midpoint, `multiplicity` the multiplicity in the original polynomial.
struct IsolatedRoot {
  BigRat lo;
  BigRat hi;
  double value = 0.0;
  int multiplicity = 1;
};

/// Sturm chain of a square-free polynomial, kept as primitive integer
/// polynomials (positive rescaling preserves the sign sequences).
class SturmChain {
 public:
  explicit SturmChain(const RatPoly& square_free);

  /// Number of sign variations of the chain at x.
  int variations(const BigRat& x) const;

  /// Number of distinct real roots in (a, b], a < b.
  int count(const BigRat& a, const BigRat& b) const;

  const RatPoly& poly() const { return seq_.front(); }

 private:
  std::vector<RatPoly> seq_;
};

/// Isolates and refines all real roots of p in the closed interval [lo, hi].
///
/// Multiplicities are recovered by square-free decomposition; each root is
/// bracketed by Sturm-count bisection and then narrowed by exact bisection
/// until hi - lo <= width_target. Roots are returned sorted ascending.
///
/// Throws numeric_error if two roots cannot be separated by sep_target
/// (possible for nearly-coincident roots of distinct square-free factors).
std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p,
                                             const BigRat& lo,
                                             const BigRat& hi,
                                             double width_target = 1e-14,
                                             double sep_target = 1e-13);

}  // namespace unimod

#endif  // UNIMOD_ISOLATE_HPP
