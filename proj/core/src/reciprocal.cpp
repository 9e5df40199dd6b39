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

#include "unimod/reciprocal.hpp"

#include <charconv>
#include <stdexcept>

namespace unimod {

namespace {

std::string_view strip(std::string_view s) {
  while (!s.empty() && (s.front() == ' ' || s.front() == '\t')) s.remove_prefix(1);
  while (!s.empty() && (s.back() == ' ' || s.back() == '\t')) s.remove_suffix(1);
  return s;
}

int64_t parse_int(std::string_view s, const char* what) {
  s = strip(s);
  int64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size())
    throw std::invalid_argument(std::string("spec: malformed ") + what + " '" +
                                std::string(s) + "'");
  return v;
}

}  // namespace

void ReciprocalSpec::validate() const {
  int last = 0;
  for (const auto& t : terms) {
    if (t.offset <= last)
      throw std::invalid_argument("spec: offsets must be strictly increasing and >= 1");
    if (t.coeff == 0)
      throw std::invalid_argument("spec: zero coefficient for offset " +
                                  std::to_string(t.offset));
    last = t.offset;
  }
}

ReciprocalSpec parse_spec(const std::string& text) {
  ReciprocalSpec spec;
  std::string_view s = strip(text);
  size_t semi = s.find(';');
  std::string_view head = semi == std::string_view::npos ? s : s.substr(0, semi);
  std::string_view tail = semi == std::string_view::npos ? std::string_view{} : s.substr(semi + 1);
  spec.a0 = parse_int(head, "central coefficient");
  tail = strip(tail);
  while (!tail.empty()) {
    size_t comma = tail.find(',');
    std::string_view item = comma == std::string_view::npos ? tail : tail.substr(0, comma);
    tail = comma == std::string_view::npos ? std::string_view{} : strip(tail.substr(comma + 1));
    item = strip(item);
    if (item.empty()) throw std::invalid_argument("spec: empty term");
    size_t colon = item.find(':');
    if (colon == std::string_view::npos)
      throw std::invalid_argument("spec: term '" + std::string(item) + "' lacks ':'");
    int64_t off = parse_int(item.substr(0, colon), "offset");
    int64_t coeff = parse_int(item.substr(colon + 1), "coefficient");
    if (off < 1) throw std::invalid_argument("spec: offset must be >= 1");
    if (off > 1'000'000) throw std::invalid_argument("spec: offset too large");
    spec.terms.push_back({static_cast<int>(off), coeff});
  }
  spec.validate();
  return spec;
}

std::string to_string(const ReciprocalSpec& spec) {
  std::string out = std::to_string(spec.a0) + ";";
  bool first = true;
  for (const auto& t : spec.terms) {
    out += first ? " " : ",";
    out += std::to_string(t.offset) + ":" + std::to_string(t.coeff);
    first = false;
  }
  return out;
}

std::vector<int64_t> expand_family(const ReciprocalSpec& spec, int n) {
  spec.validate();
  if (n <= spec.max_offset())
    throw std::invalid_argument("expand_family: need n > max offset (got n=" +
                                std::to_string(n) + ", k=" +
                                std::to_string(spec.max_offset()) + ")");
  std::vector<int64_t> c(2 * n + 1, 0);
  c[0] = c[2 * n] = 1;
  c[n] = spec.a0;
  for (const auto& t : spec.terms) {
    c[n - t.offset] = t.coeff;
    c[n + t.offset] = t.coeff;
  }
  return c;
}

}  // namespace unimod
