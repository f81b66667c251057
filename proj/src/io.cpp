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

#include "dgdd/io.hpp"

#include <charconv>
#include <fstream>
#include <istream>
#include <optional>
#include <ostream>
#include <sstream>
#include <string_view>

#include "dgdd/errors.hpp"

namespace dgdd {

namespace {

class LineReader {
 public:
  explicit LineReader(std::istream& in) : in_(in) {}

  // Next non-blank line with comments stripped; nullopt at end of input.
  std::optional<std::string> next() {
    std::string raw;
    while (std::getline(in_, raw)) {
      ++line_;
      if (auto hash = raw.find('#'); hash != std::string::npos) raw.erase(hash);
      const auto first = raw.find_first_not_of(" \t\r");
      if (first == std::string::npos) continue;
      const auto last = raw.find_last_not_of(" \t\r");
      return raw.substr(first, last - first + 1);
    }
    return std::nullopt;
  }

  std::string require(std::string_view what) {
    auto l = next();
    if (!l) throw ParseError("unexpected end of input, expected " + std::string(what), line_ + 1);
    return *l;
  }

  int line() const { return line_; }

 private:
  std::istream& in_;
  int line_ = 0;
};

std::vector<int> parse_ints(std::string_view text, int line) {
  std::vector<int> out;
  std::size_t pos = 0;
  while (pos < text.size()) {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t' || text[pos] == ',')) ++pos;
    if (pos >= text.size()) break;
    int value = 0;
    auto [ptr, ec] = std::from_chars(text.data() + pos, text.data() + text.size(), value);
    if (ec != std::errc() || ptr == text.data() + pos) {
      throw ParseError("expected an integer near '" + std::string(text.substr(pos)) + "'", line);
    }
    pos = static_cast<std::size_t>(ptr - text.data());
    out.push_back(value);
  }
  return out;
}

std::vector<int> parse_exact(std::string_view text, std::size_t count, std::string_view what,
                             int line) {
  std::vector<int> v = parse_ints(text, line);
  if (v.size() != count) {
    throw ParseError(std::string(what) + ": expected " + std::to_string(count) +
                         " integers, found " + std::to_string(v.size()),
                     line);
  }
  return v;
}

bool looks_like_permutation(std::string_view text) {
  return text.find('(') != std::string_view::npos || text.starts_with("p:");
}

Permutation parse_permutation_line(std::string_view text, int n, int line) {
  try {
    Permutation p = text.starts_with("p:") ? parse_images(text) : parse_cycles(text, n);
    if (p.size() != n) {
      throw ParseError("permutation has " + std::to_string(p.size()) + " points, expected " +
                       std::to_string(n));
    }
    return p;
  } catch (const ParseError& e) {
    throw ParseError(e.what(), line);
  } catch (const DomainError& e) {
    throw ParseError(e.what(), line);
  }
}

template <typename F>
auto rethrow_with_line(int line, F&& f) {
  try {
    return f();
  } catch (const ParseError&) {
    throw;
  } catch (const Error& e) {
    throw ParseError(e.what(), line);
  }
}

std::pair<int, int> read_header(LineReader& r) {
  const std::string h = r.require("header 'n d'");
  const auto v = parse_exact(h, 2, "header", r.line());
  if (v[0] < 1 || v[1] < 1) throw ParseError("header: n and d must be positive", r.line());
  return {v[0], v[1]};
}

Digraph read_rows(LineReader& r, int n, int d, std::optional<std::string> first) {
  std::vector<int> ports;
  ports.reserve(static_cast<std::size_t>(n) * static_cast<std::size_t>(d));
  int last_line = r.line();
  for (int v = 0; v < n; ++v) {
    std::string row = (v == 0 && first) ? *first : r.require("row " + std::to_string(v));
    last_line = r.line();
    const auto vals = parse_exact(row, static_cast<std::size_t>(d), "row " + std::to_string(v),
                                  last_line);
    for (int x : vals) {
      if (x < 0 || x >= n) {
        throw ParseError("vertex " + std::to_string(x) + " out of range", last_line);
      }
    }
    ports.insert(ports.end(), vals.begin(), vals.end());
  }
  return rethrow_with_line(last_line, [&] { return Digraph(n, d, std::move(ports)); });
}

Factorization read_factor_lines(LineReader& r, int n, int d, std::optional<std::string> first) {
  Factorization f;
  for (int s = 0; s < d; ++s) {
    std::string text = (s == 0 && first) ? *first : r.require("factor " + std::to_string(s));
    f.factors.push_back(parse_permutation_line(text, n, r.line()));
  }
  return f;
}

void expect_end(LineReader& r) {
  if (auto extra = r.next()) throw ParseError("unexpected trailing data '" + *extra + "'", r.line());
}

}  // namespace

Digraph read_digraph(std::istream& in) {
  LineReader r(in);
  const auto [n, d] = read_header(r);
  Digraph g = read_rows(r, n, d, std::nullopt);
  expect_end(r);
  return g;
}

void write_digraph(std::ostream& out, const Digraph& g) {
  out << g.order() << ' ' << g.degree() << '\n';
  for (int v = 0; v < g.order(); ++v) {
    for (int s = 0; s < g.degree(); ++s) out << (s ? " " : "") << g.out(v, s);
    out << '\n';
  }
}

Factorization read_factorization(std::istream& in) {
  LineReader r(in);
  const auto [n, d] = read_header(r);
  Factorization f = read_factor_lines(r, n, d, std::nullopt);
  expect_end(r);
  return f;
}

void write_factorization(std::ostream& out, const Factorization& f) {
  out << f.order() << ' ' << f.degree() << '\n';
  for (const auto& p : f.factors) out << print_cycles(p) << '\n';
}

DigraphInput read_digraph_input(std::istream& in) {
  LineReader r(in);
  const auto [n, d] = read_header(r);
  std::string first = r.require("first row");
  if (looks_like_permutation(first)) {
    Factorization f = read_factor_lines(r, n, d, first);
    expect_end(r);
    Digraph g = rethrow_with_line(r.line(), [&] { return from_factors(f); });
    return DigraphInput{std::move(g), std::move(f)};
  }
  Digraph g = read_rows(r, n, d, first);
  expect_end(r);
  return DigraphInput{std::move(g), std::nullopt};
}

GroupoidTable read_groupoid(std::istream& in) {
  LineReader r(in);
  const std::string h = r.require("header 'n d e'");
  const auto head = parse_exact(h, 3, "header", r.line());
  const int n = head[0];
  const int d = head[1];
  if (n < 1 || d < 1) throw ParseError("header: n and d must be positive", r.line());
  if (head[2] < -1 || head[2] >= n) throw ParseError("header: identity out of range", r.line());
  GroupoidTable t;
  t.n = n;
  t.identity = head[2];
  t.gens = parse_exact(r.require("generator line"), static_cast<std::size_t>(d), "generators",
                       r.line());
  for (int g : t.gens) {
    if (g < 0 || g >= n) throw ParseError("generator " + std::to_string(g) + " out of range", r.line());
  }
  for (int x = 0; x < n; ++x) {
    const auto row = parse_exact(r.require("table row " + std::to_string(x)),
                                 static_cast<std::size_t>(n), "table row " + std::to_string(x),
                                 r.line());
    for (int v : row) {
      if (v < 0 || v >= n) throw ParseError("entry " + std::to_string(v) + " out of range", r.line());
    }
    t.table.insert(t.table.end(), row.begin(), row.end());
  }
  expect_end(r);
  return t;
}

void write_groupoid(std::ostream& out, const GroupoidTable& t) {
  out << t.n << ' ' << t.gens.size() << ' ' << t.identity << '\n';
  for (std::size_t s = 0; s < t.gens.size(); ++s) out << (s ? " " : "") << t.gens[s];
  out << '\n';
  for (int x = 0; x < t.n; ++x) {
    for (int y = 0; y < t.n; ++y) out << (y ? " " : "") << t.product(x, y);
    out << '\n';
  }
}

CddParams read_cdd_params(std::istream& in) {
  LineReader r(in);
  const auto ab = parse_exact(r.require("header 'a b'"), 2, "header", r.line());
  std::optional<Permutation> pi;
  std::optional<std::vector<int>> t;
  int last = r.line();
  while (auto l = r.next()) {
    last = r.line();
    const auto eq = l->find('=');
    if (eq == std::string::npos) throw ParseError("expected 'pi=' or 't=' line", last);
    std::string key = l->substr(0, eq);
    while (!key.empty() && (key.back() == ' ' || key.back() == '\t')) key.pop_back();
    const std::string value = l->substr(eq + 1);
    if (key == "pi") {
      pi = parse_permutation_line(value, ab[0], last);
    } else if (key == "t") {
      t = parse_ints(value, last);
    } else {
      throw ParseError("unknown key '" + key + "'", last);
    }
  }
  if (!pi) throw ParseError("missing 'pi=' line", last);
  if (!t) throw ParseError("missing 't=' line", last);
  return rethrow_with_line(last, [&] { return CddParams(ab[0], ab[1], *pi, *t); });
}

void write_cdd_params(std::ostream& out, const CddParams& p) {
  out << p.a() << ' ' << p.b() << '\n' << "pi=" << print_cycles(p.pi()) << '\n' << "t=";
  for (std::size_t j = 0; j < p.t().size(); ++j) out << (j ? "," : "") << p.t()[j];
  out << '\n';
}

void write_dot(std::ostream& out, const Digraph& g, bool ports) {
  static constexpr std::string_view kColors[] = {"black", "red", "blue", "darkgreen",
                                                 "orange", "purple", "brown", "gray"};
  out << "digraph G {\n";
  for (int v = 0; v < g.order(); ++v) out << "  " << v << ";\n";
  for (int v = 0; v < g.order(); ++v) {
    for (int s = 0; s < g.degree(); ++s) {
      out << "  " << v << " -> " << g.out(v, s);
      if (ports) out << " [label=" << s << ", color=" << kColors[s % 8] << "]";
      out << ";\n";
    }
  }
  out << "}\n";
}

std::string read_text_file(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path.string() + "'");
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace dgdd
