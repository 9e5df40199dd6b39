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

#ifndef UNIMOD_RECIPROCAL_HPP
#define UNIMOD_RECIPROCAL_HPP

#include <cstdint>
#include <string>
#include <vector>

namespace unimod {

/// One symmetric coefficient pair: x^(n+offset) and x^(n-offset) both carry
/// `coeff` in the family member of index n.
struct SpecTerm {
  int offset = 0;   // strictly positive, strictly increasing across terms
  int64_t coeff = 0;  // nonzero
};

/// Central-coefficient description of a family of monic reciprocal integer
/// polynomials: member n is
///   x^n * (x^n + 1/x^n + a0 + sum_j coeff_j * (x^j + 1/x^j)),
/// well-formed for every n greater than the largest offset.
struct ReciprocalSpec {
  int64_t a0 = 0;
  std::vector<SpecTerm> terms;

  /// Largest offset (0 when terms is empty).
  int max_offset() const { return terms.empty() ? 0 : terms.back().offset; }

  /// Validates the invariants; throws std::invalid_argument on violation.
  void validate() const;

  bool operator==(const ReciprocalSpec&) const = default;
};

/// Parses the spec text format `a0; j1:c1, j2:c2, ...`, e.g. `0; 1:1,3:1`.
/// Whitespace around tokens is ignored. An absent term list (`a0;` or just
/// `a0`) denotes the trinomial family. Rejects duplicate or non-increasing
/// offsets, zero coefficients and malformed numbers.
ReciprocalSpec parse_spec(const std::string& text);

/// Inverse of parse_spec, canonical form (`a0; j1:c1,j2:c2`).
std::string to_string(const ReciprocalSpec& spec);

/// Expands the degree-2n family member into its coefficient vector,
/// ascending degree, length 2n+1. Requires n > max_offset.
std::vector<int64_t> expand_family(const ReciprocalSpec& spec, int n);

}  // namespace unimod

#endif  // UNIMOD_RECIPROCAL_HPP
