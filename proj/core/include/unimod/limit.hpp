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

#ifndef UNIMOD_LIMIT_HPP
#define UNIMOD_LIMIT_HPP

#include <string>
#include <utility>
#include <vector>

#include "unimod/cosine.hpp"
#include "unimod/reciprocal.hpp"

namespace unimod {

/// A point of the partition of [0, 2pi]. Genuine breakpoints solve
/// series(t) = level with level = +1 or -1; the synthetic endpoints 0 and
/// 2pi carry level 0 and multiplicity 0 when the series does not actually
/// attain +-1 there.
struct Breakpoint {
  double t = 0.0;       // in [0, 2pi]
  double x = 1.0;       // cos t, the algebraic preimage
  int level = 0;        // +1, -1, or 0 for synthetic endpoints
  int multiplicity = 0; // root multiplicity of the level equation, 0 if synthetic
};

/// Output of the exact limit computation.
///
/// `breakpoints` is the full ascending partition 0 = t_0 < ... < t_p = 2pi.
/// `admissible` are the partition subintervals on whose interior the series
/// stays strictly inside (-1, 1); the limit is 1 - measure/(2pi).
struct LimitResult {
  std::vector<Breakpoint> breakpoints;
  std::vector<std::pair<double, double>> admissible;
  double admissible_measure = 0.0;
  double limit = 0.0;
  int r = 0;  // number of admissible intervals
};

/// All solutions of series(t) = +-1 in the half-open interval [0, 2pi),
/// sorted ascending, with multiplicities from square-free decomposition of
/// the Chebyshev-converted level equations. The series must not be constant.
///
/// Throws numeric_error when root isolation cannot certify separation, or
/// when t-values from the two levels collide within 1e-12 (impossible for a
/// correct conversion, so treated as an internal failure).
std::vector<Breakpoint> breakpoints(const CosineSeries& series);

/// The limiting fraction of nonunimodular roots of the family, computed
/// exactly: breakpoints, partition, midpoint admissibility test, measure.
///
/// Degenerate constant series (no terms): the limit is 0 for |a0| <= 2 and 1
/// for |a0| > 2, matching the root behaviour of x^{2n} + a0 x^n + 1.
LimitResult nonunimodular_limit(const ReciprocalSpec& spec);

/// Closed form for the quadrinomial family {0; k:a}, any offset k:
/// 2 arccos(1/|a|) / pi. Rejects |a| <= 1 (those families are degenerate).
double quadrinomial_limit(int64_t a);

/// JSON with 17-significant-digit floats:
/// {"limit":..., "measure":..., "breakpoints":[{"t":...,"x":...,"level":...,
///  "mult":...}], "intervals":[[lo,hi],...]}
std::string to_json(const LimitResult& result);

}  // namespace unimod

#endif  // UNIMOD_LIMIT_HPP
