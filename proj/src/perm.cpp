// Copyright 2026 The dgdd Authors
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "dgdd/perm.hpp"

#include <algorithm>
#include <cctype>
#include <charconv>
#include <numeric>
#include <sstream>

#include "dgdd/errors.hpp"

namespace dgdd {

Permutation::Permutation(std::vector<int> images) : images_(std::move(images)) {
  const int n = size();
  std::vector<bool> seen(images_.size(), false);
  for (int v = 0; v < n; ++v) {
    const int w = images_[v];
    if (w < 0 || w >= n) {
      throw DomainError("permutation image " + std::to_string(w) +
                        " out of range [0, " + std::to_string(n) + ")");
    }
    if (seen[w]) {
      throw DomainError("permutation image " + std::to_string(w) +
                        " appears twice");
    }
    seen[w] = true;
  }
}

Permutation Permutation::identity(int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::rotation(int n, int step) {
  std::vector<int> images(static_cast<std::size_t>(n));
  const int s = ((step % n) + n) % n;
  for (int k = 0; k < n; ++k) images[k] = (k + s) % n;
  Permutation p;
  p.images_ = std::move(images);
  return p;
}

Permutation Permutation::from_cycles(
    int n, std::initializer_list<std::vector<int>> cycles) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> touched(static_cast<std::size_t>(n), false);
  for (const auto& cycle : cycles) {
    const std::size_t len = cycle.size();
    for (std::size_t i = 0; i < len; ++i) {
      const int from = ((cycle[i] % n) + n) % n;
      const int to = ((cycle[(i + 1) % len] % n) + n) % n;
      if (touched[from]) {
        throw DomainError("index " + std::to_string(from) +
                          " appears in two cycles");
      }
      touched[from] = true;
      images[from] = to;
    }
  }
  return Permutation(std::move(images));
}

Permutation Permutation::inverse() const {
  std::vector<int> inv(images_.size());
  for (int v = 0; v < size(); ++v) inv[images_[v]] = v;
  Permutation p;
  p.images_ = std::move(inv);
  return p;
}

Permutation Permutation::pow(long long k) const {
  Permutation base = k < 0 ? inverse() : *this;
  unsigned long long e = k < 0 ? static_cast<unsigned long long>(-k)
                               : static_cast<unsigned long long>(k);
  Permutation result = identity(size());
  while (e > 0) {
    if (e & 1) result = compose(result, base);
    base = compose(base, base);
    e >>= 1;
  }
  return result;
}

bool Permutation::is_identity() const {
  for (int v = 0; v < size(); ++v) {
    if (images_[v] != v) return false;
  }
  return true;
}

std::vector<int> Permutation::cycle_of(int v) const {
  std::vector<int> cycle{v};
  for (int w = images_[v]; w != v; w = images_[w]) cycle.push_back(w);
  return cycle;
}

std::vector<int> Permutation::cycle_type() const {
  std::vector<int> lengths;
  std::vector<bool> seen(images_.size(), false);
  for (int v = 0; v < size(); ++v) {
    if (seen[v]) continue;
    int len = 0;
    for (int w = v; !seen[w]; w = images_[w]) {
      seen[w] = true;
      ++len;
    }
    if (len > 1) lengths.push_back(len);
  }
  std::sort(lengths.begin(), lengths.end());
  return lengths;
}

std::uint64_t Permutation::order() const {
  std::uint64_t result = 1;
  for (int len : cycle_type()) {
    result = std::lcm(result, static_cast<std::uint64_t>(len));
  }
  return result;
}

Permutation compose(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DomainError("compose: size mismatch " + std::to_string(p.size()) +
                      " vs " + std::to_string(q.size()));
  }
  std::vector<int> images(static_cast<std::size_t>(p.size()));
  for (int v = 0; v < p.size(); ++v) images[v] = p(q(v));
  return Permutation(std::move(images));
}

Permutation conjugate(const Permutation& p, const Permutation& g) {
  return compose(g, compose(p, g.inverse()));
}

bool is_derangement(const Permutation& p) {
  for (int v = 0; v < p.size(); ++v) {
    if (p(v) == v) return false;
  }
  return true;
}

bool are_disjoint(const Permutation& p, const Permutation& q) {
  if (p.size() != q.size()) {
    throw DomainError("are_disjoint: size mismatch");
  }
  for (int v = 0; v < p.size(); ++v) {
    if (p(v) == q(v)) return false;
  }
  return true;
}

namespace {

void skip_space(std::string_view text, std::size_t& pos) {
  while (pos < text.size() &&
         std::isspace(static_cast<unsigned char>(text[pos]))) {
    ++pos;
  }
}

int read_int(std::string_view text, std::size_t& pos) {
  skip_space(text, pos);
  int value = 0;
  const char* first = text.data() + pos;
  const char* last = text.data() + text.size();
  auto [ptr, ec] = std::from_chars(first, last, value);
  if (ec != std::errc() || ptr == first) {
    throw ParseError("expected an integer at offset " + std::to_string(pos) +
                     " in \"" + std::string(text) + "\"");
  }
  pos += static_cast<std::size_t>(ptr - first);
  return value;
}

}  // namespace

Permutation parse_cycles(std::string_view text, int n) {
  std::vector<int> images(static_cast<std::size_t>(n));
  std::iota(images.begin(), images.end(), 0);
  std::vector<bool> used(static_cast<std::size_t>(n), false);
  std::size_t pos = 0;
  skip_space(text, pos);
  while (pos < text.size()) {
    if (text[pos] != '(') {
      throw ParseError("expected '(' at offset " + std::to_string(pos) +
                       " in \"" + std::string(text) + "\"");
    }
    ++pos;
    skip_space(text, pos);
    std::vector<int> cycle;
    if (pos < text.size() && text[pos] == ')') {
      ++pos;
      skip_space(text, pos);
      continue;
    }
    while (true) {
      const int v = read_int(text, pos);
      if (v < 0 || v >= n) {
        throw ParseError("cycle index " + std::to_string(v) +
                         " out of range [0, " + std::to_string(n) + ")");
      }
      if (used[v]) {
        throw ParseError("cycle index " + std::to_string(v) + " repeated");
      }
      used[v] = true;
      cycle.push_back(v);
      skip_space(text, pos);
      if (pos >= text.size()) {
        throw ParseError("unterminated cycle in \"" + std::string(text) + "\"");
      }
      if (text[pos] == ',') {
        ++pos;
        continue;
      }
      if (text[pos] == ')') {
        ++pos;
        break;
      }
      throw ParseError("unexpected '" + std::string(1, text[pos]) +
                       "' in cycle notation");
    }
    for (std::size_t i = 0; i < cycle.size(); ++i) {
      images[cycle[i]] = cycle[(i + 1) % cycle.size()];
    }
    skip_space(text, pos);
  }
  return Permutation(std::move(images));
}

std::string print_cycles(const Permutation& p) {
  std::string out;
  std::vector<bool> seen(static_cast<std::size_t>(p.size()), false);
  for (int v = 0; v < p.size(); ++v) {
    if (seen[v] || p(v) == v) continue;
    out += '(';
    for (int w = v; !seen[w]; w = p(w)) {
      seen[w] = true;
      if (w != v) out += ',';
      out += std::to_string(w);
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

Permutation parse_images(std::string_view text) {
  std::size_t pos = 0;
  skip_space(text, pos);
  if (text.substr(pos, 2) == "p:") pos += 2;
  std::vector<int> images;
  skip_space(text, pos);
  while (pos < text.size()) {
    images.push_back(read_int(text, pos));
    skip_space(text, pos);
  }
  try {
    return Permutation(std::move(images));
  } catch (const DomainError& e) {
    throw ParseError(e.what());
  }
}

std::string print_images(const Permutation& p) {
  std::ostringstream out;
  out << "p:";
  for (int v = 0; v < p.size(); ++v) out << ' ' << p(v);
  return out.str();
}

}  // namespace dgdd
