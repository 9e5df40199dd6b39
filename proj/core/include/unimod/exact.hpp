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

#ifndef UNIMOD_EXACT_HPP
#define UNIMOD_EXACT_HPP

#include <boost/multiprecision/cpp_int.hpp>

#include <utility>
#include <vector>

namespace unimod {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

/// Dense univariate polynomial with exact rational coefficients, ascending
/// degree. The zero polynomial is the empty vector; otherwise the leading
/// coefficient is nonzero.
using RatPoly = std::vector<BigRat>;

/// Removes trailing zero coefficients in place.
void trim(RatPoly& p);

/// Degree, with deg 0 = -1 by convention.
int degree(const RatPoly& p);

bool is_zero(const RatPoly& p);

BigRat eval_exact(const RatPoly& p, const BigRat& x);
double eval(const RatPoly& p, double x);

/// Exact sign of p(x): -1, 0 or +1.
int sign_at(const RatPoly& p, const BigRat& x);

RatPoly derivative(const RatPoly& p);
RatPoly add(const RatPoly& a, const RatPoly& b);
RatPoly sub(const RatPoly& a, const RatPoly& b);
RatPoly mul(const RatPoly& a, const RatPoly& b);
RatPoly scale(const RatPoly& a, const BigRat& c);

/// Euclidean division: returns {quotient, remainder} with
/// a = q*b + r, deg r < deg b. b must be nonzero.
std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b);

/// Monic gcd of a and b (1 for coprime inputs, 0 only if both are zero).
RatPoly poly_gcd(RatPoly a, RatPoly b);

/// Scales by a positive rational so that coefficients become coprime
/// integers. Preserves signs, hence also the root set and sign sequences.
RatPoly primitive_part(const RatPoly& p);

/// Yun square-free decomposition: returns pairs (factor, multiplicity) with
/// p = lc * prod factor_i^mult_i, factors square-free, pairwise coprime,
/// each of degree >= 1, multiplicities strictly increasing.
std::vector<std::pair<RatPoly, int>> square_free_decompose(const RatPoly& p);

}  // namespace unimod

#endif  // UNIMOD_EXACT_HPP
