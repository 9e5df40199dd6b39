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

#include "unimod/cosine.hpp"

#include <cmath>
#include <stdexcept>

namespace unimod {

CosineSeries::CosineSeries(BigRat constant, std::vector<Harmonic> harmonics)
    : constant_(std::move(constant)), harmonics_(std::move(harmonics)) {
  int last = 0;
  for (const auto& h : harmonics_) {
    if (h.frequency <= last)
      throw std::invalid_argument("CosineSeries: frequencies must be strictly increasing and >= 1");
    if (h.amplitude == 0)
      throw std::invalid_argument("CosineSeries: zero amplitude");
    last = h.frequency;
  }
  dconstant_ = constant_.convert_to<double>();
  damp_.reserve(harmonics_.size());
  dfreq_.reserve(harmonics_.size());
  for (const auto& h : harmonics_) {
    damp_.push_back(h.amplitude.convert_to<double>());
    dfreq_.push_back(h.frequency);
  }
}

double CosineSeries::operator()(double t) const {
  double v = dconstant_;
  for (size_t i = 0; i < damp_.size(); ++i) v += damp_[i] * std::cos(dfreq_[i] * t);
  return v;
}

CosineSeries central_series(const ReciprocalSpec& spec) {
  spec.validate();
  std::vector<CosineSeries::Harmonic> hs;
  hs.reserve(spec.terms.size());
  for (const auto& t : spec.terms)
    hs.push_back({t.offset, BigRat(-t.coeff)});
  return CosineSeries(BigRat(-spec.a0, 2), std::move(hs));
}

namespace {
constexpr double kSinGuard = 1e-9;
}

double odd_kernel(int64_t m, double t) {
  if (m < 1) throw std::invalid_argument("odd_kernel: m must be >= 1");
  double s = std::sin(t);
  if (std::fabs(s) < kSinGuard)
    return static_cast<double>(m) * std::cos(2.0 * m * t) / std::cos(t);
  return std::sin(2.0 * m * t) / (2.0 * s);
}

double even_kernel(int64_t m, double t) {
  if (m < 1) throw std::invalid_argument("even_kernel: m must be >= 1");
  double s = std::sin(t);
  if (std::fabs(s) < kSinGuard)
    return (m + 0.5) * std::cos((2.0 * m + 1.0) * t) / std::cos(t);
  return std::sin((2.0 * m + 1.0) * t) / (2.0 * s);
}

}  // namespace unimod
