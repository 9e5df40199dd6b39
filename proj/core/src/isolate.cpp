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

#include "unimod/isolate.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>

#include "unimod/errors.hpp"

namespace unimod {

SturmChain::SturmChain(const RatPoly& square_free) {
  RatPoly s0 = primitive_part(square_free);
  trim(s0);
  if (degree(s0) < 1)
    throw std::invalid_argument("SturmChain: polynomial must be non-constant");
  seq_.push_back(s0);
  seq_.push_back(primitive_part(derivative(s0)));
  while (degree(seq_.back()) >= 1) {
    RatPoly r = divmod(seq_[seq_.size() - 2], seq_.back()).second;
    if (r.empty()) break;  // square-free input never reaches here with deg>0 tail
    for (auto& c : r) c = -c;
    seq_.push_back(primitive_part(r));
  }
}

int SturmChain::variations(const BigRat& x) const {
  int count = 0;
  int last = 0;
  for (const auto& s : seq_) {
    int sg = sign_at(s, x);
    if (sg == 0) continue;
    if (last != 0 && sg != last) ++count;
    last = sg;
  }
  return count;
}

int SturmChain::count(const BigRat& a, const BigRat& b) const {
  return variations(a) - variations(b);
}

namespace {

// Narrows [a, b] (sign change certified, exactly one root) until its width
// drops below target. A rational midpoint hit collapses the interval.
void refine_bracket(const RatPoly& f, BigRat& a, BigRat& b, const BigRat& target) {
  int sa = sign_at(f, a);
  while (b - a > target) {
    BigRat m = (a + b) / 2;
    int sm = sign_at(f, m);
    if (sm == 0) {
      a = m;
      b = m;
      return;
    }
    if (sm == sa)
      a = m;
    else
      b = m;
  }
}

struct FactorRoots {
  std::vector<IsolatedRoot> roots;
};

// Isolates all real roots of a square-free factor in the open interval
// (lo, hi); endpoint roots must already be deflated away by the caller.
void isolate_factor(const RatPoly& f, const BigRat& lo, const BigRat& hi,
                    const BigRat& width, int multiplicity,
                    std::vector<IsolatedRoot>& out) {
  RatPoly g = f;
  BigRat a0 = lo, b0 = hi;
  // Exact rational roots discovered at bisection midpoints are deflated and
  // the factor is re-isolated; this terminates since the degree drops.
restart:
  trim(g);
  if (degree(g) < 1) return;
  SturmChain chain(g);
  struct Seg {
    BigRat a, b;
    int va, vb;
  };
  std::deque<Seg> work;
  work.push_back({a0, b0, chain.variations(a0), chain.variations(b0)});
  while (!work.empty()) {
    Seg s = work.front();
    work.pop_front();
    int n = s.va - s.vb;
    if (n <= 0) continue;
    if (n == 1) {
      BigRat a = s.a, b = s.b;
      refine_bracket(g, a, b, width);
      IsolatedRoot r;
      r.lo = a;
      r.hi = b;
      r.value = BigRat((a + b) / 2).convert_to<double>();
      r.multiplicity = multiplicity;
      out.push_back(std::move(r));
      continue;
    }
    BigRat m = (s.a + s.b) / 2;
    if (sign_at(g, m) == 0) {
      IsolatedRoot r;
      r.lo = m;
      r.hi = m;
      r.value = m.convert_to<double>();
      r.multiplicity = multiplicity;
      out.push_back(std::move(r));
      g = divmod(g, RatPoly{-m, 1}).first;
      goto restart;
    }
    int vm = chain.variations(m);
    work.push_back({s.a, m, s.va, vm});
    work.push_back({m, s.b, vm, s.vb});
  }
}

}  // namespace

std::vector<IsolatedRoot> isolate_real_roots(const RatPoly& p, const BigRat& lo,
                                             const BigRat& hi,
                                             double width_target,
                                             double sep_target) {
  RatPoly q = p;
  trim(q);
  if (is_zero(q))
    throw std::invalid_argument("isolate_real_roots: zero polynomial");
  if (lo >= hi)
    throw std::invalid_argument("isolate_real_roots: empty interval");

  std::vector<IsolatedRoot> out;
  const BigRat width(width_target);
  for (auto& [factor, mult] : square_free_decompose(q)) {
    RatPoly f = primitive_part(factor);
    // endpoint roots, at most one each for a square-free factor
    for (const BigRat* e : {&lo, &hi}) {
      if (sign_at(f, *e) == 0) {
        IsolatedRoot r;
        r.lo = *e;
        r.hi = *e;
        r.value = e->convert_to<double>();
        r.multiplicity = mult;
        out.push_back(std::move(r));
        f = divmod(f, RatPoly{-*e, 1}).first;
      }
    }
    isolate_factor(f, lo, hi, width, mult, out);
  }

  std::sort(out.begin(), out.end(), [](const IsolatedRoot& a, const IsolatedRoot& b) {
    return a.lo + a.hi < b.lo + b.hi;
  });
  const BigRat sep(sep_target);
  for (size_t i = 1; i < out.size(); ++i) {
    BigRat gap = (out[i].lo + out[i].hi - out[i - 1].lo - out[i - 1].hi) / 2;
    if (gap < sep)
      throw numeric_error("isolate_real_roots: roots closer than separation target");
  }
  return out;
}

}  // namespace unimod
