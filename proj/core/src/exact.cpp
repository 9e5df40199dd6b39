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

#include "unimod/exact.hpp"

#include <algorithm>
#include <stdexcept>

namespace unimod {

void trim(RatPoly& p) {
  while (!p.empty() && p.back() == 0) p.pop_back();
}

int degree(const RatPoly& p) { return static_cast<int>(p.size()) - 1; }

bool is_zero(const RatPoly& p) { return p.empty(); }

BigRat eval_exact(const RatPoly& p, const BigRat& x) {
  BigRat acc = 0;
  for (auto it = p.rbegin(); it != p.rend(); ++it) acc = acc * x + *it;
  return acc;
}

double eval(const RatPoly& p, double x) {
  double acc = 0.0;
  for (auto it = p.rbegin(); it != p.rend(); ++it)
    acc = acc * x + it->convert_to<double>();
  return acc;
}

int sign_at(const RatPoly& p, const BigRat& x) {
  BigRat v = eval_exact(p, x);
  return v == 0 ? 0 : (v > 0 ? 1 : -1);
}

RatPoly derivative(const RatPoly& p) {
  if (p.size() <= 1) return {};
  RatPoly d(p.size() - 1);
  for (size_t i = 1; i < p.size(); ++i) d[i - 1] = p[i] * static_cast<int>(i);
  return d;
}

RatPoly add(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] += b[i];
  trim(r);
  return r;
}

RatPoly sub(const RatPoly& a, const RatPoly& b) {
  RatPoly r(std::max(a.size(), b.size()), BigRat(0));
  for (size_t i = 0; i < a.size(); ++i) r[i] += a[i];
  for (size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
  trim(r);
  return r;
}

RatPoly mul(const RatPoly& a, const RatPoly& b) {
  if (a.empty() || b.empty()) return {};
  RatPoly r(a.size() + b.size() - 1, BigRat(0));
  for (size_t i = 0; i < a.size(); ++i)
    for (size_t j = 0; j < b.size(); ++j) r[i + j] += a[i] * b[j];
  trim(r);
  return r;
}

RatPoly scale(const RatPoly& a, const BigRat& c) {
  if (c == 0) return {};
  RatPoly r = a;
  for (auto& v : r) v *= c;
  return r;
}

std::pair<RatPoly, RatPoly> divmod(const RatPoly& a, const RatPoly& b) {
  if (b.empty()) throw std::invalid_argument("divmod: division by zero polynomial");
  RatPoly r = a;
  trim(r);
  if (r.size() < b.size()) return {{}, r};
  RatPoly q(r.size() - b.size() + 1, BigRat(0));
  const BigRat& lead = b.back();
  while (r.size() >= b.size()) {
    BigRat c = r.back() / lead;
    size_t off = r.size() - b.size();
    q[off] = c;
    for (size_t i = 0; i + 1 < b.size(); ++i) r[off + i] -= c * b[i];
    r.pop_back();
    trim(r);
    if (r.empty()) break;
  }
  trim(q);
  return {q, r};
}

RatPoly poly_gcd(RatPoly a, RatPoly b) {
  trim(a);
  trim(b);
  while (!b.empty()) {
    RatPoly r = divmod(a, b).second;
    a = std::move(b);
    b = std::move(r);
  }
  if (a.empty()) return a;
  // normalize to monic
  BigRat inv = 1 / a.back();
  for (auto& c : a) c *= inv;
  return a;
}

RatPoly primitive_part(const RatPoly& p) {
  if (p.empty()) return {};
  // lcm of denominators, then gcd of numerators
  BigInt l = 1;
  for (const auto& c : p) {
    BigInt d = denominator(c);
    l = l / gcd(l, d) * d;
  }
  BigInt g = 0;
  for (const auto& c : p) g = gcd(g, BigInt(numerator(c) * (l / denominator(c))));
  if (g == 0) return {};
  RatPoly r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[i] * BigRat(l, g);
  return r;
}

std::vector<std::pair<RatPoly, int>> square_free_decompose(const RatPoly& p) {
  std::vector<std::pair<RatPoly, int>> out;
  RatPoly f = p;
  trim(f);
  if (degree(f) < 1) return out;

  RatPoly fp = derivative(f);
  RatPoly g = poly_gcd(f, fp);
  if (degree(g) < 1) {
    out.emplace_back(f, 1);
    return out;
  }
  // Yun's algorithm
  RatPoly b = divmod(f, g).first;
  RatPoly c = divmod(fp, g).first;
  RatPoly d = sub(c, derivative(b));
  for (int i = 1;; ++i) {
    RatPoly a = poly_gcd(b, d);
    if (degree(a) >= 1) out.emplace_back(a, i);
    b = divmod(b, a).first;
    if (degree(b) < 1) break;
    c = divmod(d, a).first;
    d = sub(c, derivative(b));
  }
  return out;
}

}  // namespace unimod
