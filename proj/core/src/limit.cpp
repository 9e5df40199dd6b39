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

#include "unimod/limit.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "unimod/chebyshev.hpp"
#include "unimod/errors.hpp"
#include "unimod/format.hpp"
#include "unimod/isolate.hpp"

namespace unimod {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;
constexpr double kDedupTol = 1e-12;

void append_level_roots(const CosineSeries& series, int level,
                        std::vector<Breakpoint>& out) {
  AlgebraicPoly p = to_algebraic(series, BigRat(level));
  if (is_zero(p.coeffs)) return;  // caller guarantees non-constant series
  if (degree(p.coeffs) == 0) return;  // level never attained
  for (const auto& root : isolate_real_roots(p.coeffs, BigRat(-1), BigRat(1))) {
    bool exactly_one = root.lo == root.hi && root.lo == 1;
    bool exactly_minus_one = root.lo == root.hi && root.lo == -1;
    double x = std::clamp(root.value, -1.0, 1.0);
    double t1 = exactly_one ? 0.0 : (exactly_minus_one ? std::numbers::pi : std::acos(x));
    out.push_back({t1, x, level, root.multiplicity});
    double t2 = kTwoPi - t1;
    if (!exactly_one && !exactly_minus_one)
      out.push_back({t2, x, level, root.multiplicity});
  }
}

}  // namespace

std::vector<Breakpoint> breakpoints(const CosineSeries& series) {
  if (series.is_constant())
    throw std::invalid_argument("breakpoints: series is constant");
  std::vector<Breakpoint> bps;
  append_level_roots(series, +1, bps);
  append_level_roots(series, -1, bps);
  std::sort(bps.begin(), bps.end(),
            [](const Breakpoint& a, const Breakpoint& b) { return a.t < b.t; });
  for (size_t i = 1; i < bps.size(); ++i) {
    if (bps[i].t - bps[i - 1].t < kDedupTol)
      throw numeric_error("breakpoints: collision between level roots at t=" +
                          g17(bps[i].t));
  }
  return bps;
}

LimitResult nonunimodular_limit(const ReciprocalSpec& spec) {
  CosineSeries series = central_series(spec);
  LimitResult res;

  if (series.is_constant()) {
    // trinomial x^{2n} + a0 x^n + 1: every root unimodular iff |a0| <= 2
    bool all_unimodular = std::abs(spec.a0) <= 2;
    res.breakpoints = {{0.0, 1.0, 0, 0}, {kTwoPi, 1.0, 0, 0}};
    if (all_unimodular) {
      res.admissible = {{0.0, kTwoPi}};
      res.admissible_measure = kTwoPi;
      res.limit = 0.0;
      res.r = 1;
    } else {
      res.admissible_measure = 0.0;
      res.limit = 1.0;
      res.r = 0;
    }
    return res;
  }

  std::vector<Breakpoint> parts = breakpoints(series);
  if (parts.empty() || parts.front().t != 0.0)
    parts.insert(parts.begin(), Breakpoint{0.0, 1.0, 0, 0});
  // t = 2pi mirrors whatever t = 0 is
  parts.push_back({kTwoPi, 1.0, parts.front().level, parts.front().multiplicity});

  size_t total = parts.size() - 1;
  for (size_t i = 0; i + 1 < parts.size(); ++i) {
    double lo = parts[i].t, hi = parts[i + 1].t;
    double mid = 0.5 * (lo + hi);
    if (std::fabs(series(mid)) < 1.0) res.admissible.emplace_back(lo, hi);
  }
  res.r = static_cast<int>(res.admissible.size());
  if (res.admissible.size() == total) {
    // full measure: report exactly 0 (sum of interval lengths would only
    // telescope up to round-off)
    res.admissible_measure = kTwoPi;
    res.limit = 0.0;
  } else if (res.admissible.empty()) {
    res.admissible_measure = 0.0;
    res.limit = 1.0;
  } else {
    double measure = 0.0;
    for (const auto& [lo, hi] : res.admissible) measure += hi - lo;
    res.admissible_measure = measure;
    res.limit = 1.0 - measure / kTwoPi;
  }
  res.breakpoints = std::move(parts);
  return res;
}

double quadrinomial_limit(int64_t a) {
  if (a <= 1 && a >= -1)
    throw std::invalid_argument("quadrinomial_limit: |a| must be > 1");
  return 2.0 * std::acos(1.0 / static_cast<double>(std::abs(a))) / std::numbers::pi;
}

std::string to_json(const LimitResult& result) {
  std::string out = "{\"limit\":" + g17(result.limit) +
                    ",\"measure\":" + g17(result.admissible_measure) +
                    ",\"breakpoints\":[";
  for (size_t i = 0; i < result.breakpoints.size(); ++i) {
    const Breakpoint& b = result.breakpoints[i];
    if (i) out += ",";
    out += "{\"t\":" + g17(b.t) + ",\"x\":" + g17(b.x) +
           ",\"level\":" + std::to_string(b.level) +
           ",\"mult\":" + std::to_string(b.multiplicity) + "}";
  }
  out += "],\"intervals\":[";
  for (size_t i = 0; i < result.admissible.size(); ++i) {
    if (i) out += ",";
    out += "[" + g17(result.admissible[i].first) + "," +
           g17(result.admissible[i].second) + "]";
  }
  out += "]}";
  return out;
}

}  // namespace unimod
