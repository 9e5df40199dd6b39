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

#ifndef UNIMOD_COSINE_HPP
#define UNIMOD_COSINE_HPP

#include <vector>

#include "unimod/exact.hpp"
#include "unimod/reciprocal.hpp"

namespace unimod {

/// A finite cosine series  constant + sum amplitude_j * cos(frequency_j * t),
/// even about t = 0 and t = pi. Exact rational coefficients; evaluation in
/// double happens through a cached double view.
class CosineSeries {
 public:
  struct Harmonic {
    int frequency = 0;  // >= 1, strictly increasing
    BigRat amplitude;   // nonzero
  };

  CosineSeries() = default;
  CosineSeries(BigRat constant, std::vector<Harmonic> harmonics);

  const BigRat& constant() const { return constant_; }
  const std::vector<Harmonic>& harmonics() const { return harmonics_; }
  bool is_constant() const { return harmonics_.empty(); }
  int max_frequency() const {
    return harmonics_.empty() ? 0 : harmonics_.back().frequency;
  }

  double operator()(double t) const;

 private:
  BigRat constant_;
  std::vector<Harmonic> harmonics_;
  // double view for fast sampling
  double dconstant_ = 0.0;
  std::vector<double> damp_;
  std::vector<int> dfreq_;
};

/// The fixed side of the intersection equation for a reciprocal family:
/// -a0/2 - sum coeff_j cos(j t). Its graph does not depend on n.
CosineSeries central_series(const ReciprocalSpec& spec);

/// Closed forms for the all-ones families, usable for arbitrarily large m at
/// O(1) cost:
///   odd_kernel(m, t)  = cos t + cos 3t + ... + cos (2m-1)t = sin 2mt / (2 sin t)
///   even_kernel(m, t) = 1/2 + cos 2t + ... + cos 2mt = sin (2m+1)t / (2 sin t)
/// Near multiples of pi (|sin t| < 1e-9) the removable singularity is patched
/// with the l'Hopital value m*cos(2mt)/cos(t), resp. (m+1/2)*cos((2m+1)t)/cos(t).
double odd_kernel(int64_t m, double t);
double even_kernel(int64_t m, double t);

}  // namespace unimod

#endif  // UNIMOD_COSINE_HPP
