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

#include "cli.hpp"

#include <CLI11.hpp>

#include <filesystem>
#include <fstream>
#include <memory>
#include <ostream>
#include <sstream>

#include "dgdd/builtins.hpp"
#include "dgdd/cdd.hpp"
#include "dgdd/covergroup.hpp"
#include "dgdd/errors.hpp"
#include "dgdd/io.hpp"
#include "dgdd/search.hpp"
#include "dgdd/verify.hpp"

namespace dgdd::cli {

namespace {

enum class Format { kText, kRecords, kDot };

struct Globals {
  Format format = Format::kText;
  int threads = 1;
  std::uint64_t max_elems = 5'000'000;
};

std::string join_ints(const std::vector<int>& v, const char* sep) {
  std::string s;
  for (std::size_t k = 0; k < v.size(); ++k) s += (k ? sep : "") + std::to_string(v[k]);
  return s;
}

void write_file(const std::filesystem::path& path, const std::string& text) {
  std::ofstream f(path);
  if (!f) throw Error("cannot write '" + path.string() + "'");
  f << text;
}

template <typename F>
std::string render(F&& writer) {
  std::ostringstream ss;
  writer(ss);
  return ss.str();
}

// A positional source is a file path or, failing that, a builtin name.
DigraphInput load(const std::string& source, const BuiltinOptions& bopts) {
  if (std::filesystem::exists(source)) {
    std::istringstream in(read_text_file(source));
    return read_digraph_input(in);
  }
  const auto names = builtin_names();
  if (std::find(names.begin(), names.end(), source) != names.end()) {
    Builtin b = builtin(source, bopts);
    return DigraphInput{std::move(b.digraph), std::move(b.factors)};
  }
  throw Error("no such file or builtin: '" + source + "'");
}

Factorization factors_of(const DigraphInput& in) {
  return in.factors ? *in.factors : petersen_factorize(in.digraph);
}

void emit_digraph(std::ostream& out, const Digraph& g, Format format) {
  switch (format) {
    case Format::kText: write_digraph(out, g); break;
    case Format::kDot: write_dot(out, g); break;
    case Format::kRecords:
      out << "digraph n=" << g.order() << " d=" << g.degree() << '\n';
      for (int v = 0; v < g.order(); ++v) {
        for (int s = 0; s < g.degree(); ++s) {
          out << "edge from=" << v << " to=" << g.out(v, s) << " port=" << s << '\n';
        }
      }
      break;
  }
}

void add_builtin_options(CLI::App* cmd, BuiltinOptions& b) {
  cmd->add_option("--d", b.d, "Degree for kautz");
  cmd->add_option("--D", b.diameter, "Diameter for kautz");
  cmd->add_option("--p", b.p, "Odd prime for hs");
  cmd->add_option("--n", b.n, "Vertex count for cycle");
  cmd->add_option("--which", b.which, "Class index for example11 (1-3)");
}

CddParams cdd_from_flags(const std::string& file, int a, int b, const std::string& pi,
                         const std::string& t) {
  if (!file.empty()) {
    std::istringstream in(read_text_file(file));
    return read_cdd_params(in);
  }
  if (a < 1 || b < 1 || t.empty()) {
    throw Error("cdd: give a parameter file or --a, --b, --pi and --t");
  }
  std::ostringstream text;
  text << a << ' ' << b << "\npi=" << (pi.empty() ? "()" : pi) << "\nt=" << t << '\n';
  std::istringstream in(text.str());
  return read_cdd_params(in);
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Degree-diameter digraph toolkit", "dgdd"};
  app.require_subcommand(1);
  Globals g;
  std::string format = "text";
  app.add_option("--format", format, "Output format")
      ->check(CLI::IsMember({"text", "records", "dot"}));
  app.add_option("--threads", g.threads, "Worker threads")->check(CLI::PositiveNumber);
  app.add_option("--max-elems", g.max_elems, "Element cap for group enumeration");

  // build
  auto* build = app.add_subcommand("build", "Build a named digraph");
  std::string build_name;
  std::string build_out;
  BuiltinOptions build_opts;
  build->add_option("name", build_name, "Builtin name")->required();
  build->add_option("-o,--output", build_out, "Write PREFIX.dg and PREFIX.fac");
  add_builtin_options(build, build_opts);

  // diameter
  auto* diam = app.add_subcommand("diameter", "Diameter of a digraph");
  std::string diam_src;
  BuiltinOptions diam_opts;
  diam->add_option("source", diam_src, "Digraph/factor file or builtin name")->required();
  add_builtin_options(diam, diam_opts);

  // factorize
  auto* fac = app.add_subcommand("factorize", "1-factorization of a regular digraph");
  std::string fac_src;
  bool fac_all = false;
  BuiltinOptions fac_opts;
  fac->add_option("source", fac_src, "Digraph/factor file or builtin name")->required();
  fac->add_flag("--all", fac_all, "List every factorization (degree 2, n <= 24)");
  add_builtin_options(fac, fac_opts);

  // cover-group
  auto* cover = app.add_subcommand("cover-group", "Covering group of a 1-factorization");
  std::string cover_src;
  bool keep_extremal = false;
  bool with_inverses = false;
  int shape_a = 0;
  int shape_b = 0;
  BuiltinOptions cover_opts;
  cover->add_option("source", cover_src, "Digraph/factor file or builtin name")->required();
  cover->add_flag("--keep-extremal", keep_extremal, "List elements at maximum distance");
  cover->add_flag("--inverses", with_inverses, "Also multiply by generator inverses");
  cover->add_option("--a", shape_a, "Outer size for the U_ab divisibility check");
  cover->add_option("--b", shape_b, "Inner size for the U_ab divisibility check");
  add_builtin_options(cover, cover_opts);

  // cdd
  auto* cdd = app.add_subcommand("cdd", "Cyclic difference digraph from (a, b, pi, t)");
  std::string cdd_file;
  std::string cdd_pi;
  std::string cdd_t;
  std::string cdd_out;
  int cdd_a = 0;
  int cdd_b = 0;
  int cdd_shift = 0;
  bool cdd_gcd = false;
  cdd->add_option("params", cdd_file, "Parameter file");
  cdd->add_option("--a", cdd_a, "Outer size");
  cdd->add_option("--b", cdd_b, "Inner size");
  cdd->add_option("--pi", cdd_pi, "Permutation of Z_a in cycle notation");
  cdd->add_option("--t", cdd_t, "Offsets t_0,...,t_{a-1}");
  cdd->add_option("--shift", cdd_shift, "Apply the shift isomorphism this many times")
      ->check(CLI::NonNegativeNumber);
  cdd->add_flag("--gcd", cdd_gcd, "Also print the (Z, T) pair");
  cdd->add_option("-o,--output", cdd_out, "Write PREFIX.dg, PREFIX.fac and PREFIX.cdd");

  // search
  auto* srch = app.add_subcommand("search", "Search companions of the n-cycle");
  SearchSpec spec;
  std::string mode = "pruned";
  int degree = 2;
  std::string search_out;
  bool no_dedup = false;
  srch->add_option("--n", spec.n, "Vertex count")->required();
  srch->add_option("--degree", degree, "Degree (only 2 is supported)");
  srch->add_option("--diameter", spec.diameter_target, "Diameter target")->required();
  srch->add_option("--mode", mode, "exhaustive, pruned or random")
      ->check(CLI::IsMember({"exhaustive", "pruned", "random"}));
  srch->add_option("--seed", spec.seed, "Random seed");
  srch->add_option("--max-nodes", spec.max_nodes, "Node or step budget (0 = none)");
  srch->add_option("--restarts", spec.restarts, "Random restarts");
  srch->add_option("--steps", spec.steps_per_restart, "Steps per random restart");
  srch->add_option("--rotation-step", spec.rotation_step,
                   "Random mode: only companions commuting with k -> k + step");
  srch->add_flag("--no-dedup", no_dedup, "Keep isomorphic duplicates");
  srch->add_option("-o,--output", search_out, "Directory for class_K.fac files");

  // verify
  auto* ver = app.add_subcommand("verify", "Run the claim catalog");
  std::vector<std::string> only;
  VerifyOptions vopts;
  bool list_claims = false;
  ver->add_option("--only", only, "Groups or claim ids");
  ver->add_option("--cases", vopts.property_cases, "Cases per property claim");
  ver->add_option("--seed", vopts.seed, "Property sweep seed");
  ver->add_flag("--list", list_claims, "List claims without running them");

  try {
    std::vector<std::string> reversed(args.rbegin(), args.rend());
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kOk : kUsage;
  }
  g.format = format == "dot" ? Format::kDot : format == "records" ? Format::kRecords : Format::kText;
  const bool records = g.format == Format::kRecords;

  try {
    if (*build) {
      Builtin b = builtin(build_name, build_opts);
      if (!build_out.empty()) {
        write_file(build_out + ".dg", render([&](std::ostream& o) { write_digraph(o, b.digraph); }));
        if (b.factors) {
          write_file(build_out + ".fac",
                     render([&](std::ostream& o) { write_factorization(o, *b.factors); }));
        }
        out << "wrote " << build_out << ".dg" << (b.factors ? " and " + build_out + ".fac" : "")
            << '\n';
      } else {
        emit_digraph(out, b.digraph, g.format);
      }
      return kOk;
    }

    if (*diam) {
      const DigraphInput in = load(diam_src, diam_opts);
      const int d = diameter(in.digraph, g.threads);
      if (records) {
        out << "diameter=" << d << " n=" << in.digraph.order() << " d=" << in.digraph.degree()
            << '\n';
      } else {
        out << "diameter " << d << '\n';
      }
      return kOk;
    }

    if (*fac) {
      const DigraphInput in = load(fac_src, fac_opts);
      std::vector<Factorization> all;
      if (fac_all) {
        all = all_degree2_factorizations(in.digraph);
      } else {
        all.push_back(petersen_factorize(in.digraph));
      }
      for (std::size_t k = 0; k < all.size(); ++k) {
        if (records) {
          for (int s = 0; s < all[k].degree(); ++s) {
            out << "factor set=" << k << " index=" << s
                << " cycles=" << print_cycles(all[k].factors[static_cast<std::size_t>(s)]) << '\n';
          }
        } else if (fac_all) {
          out << "# factorization " << k << '\n';
          write_factorization(out, all[k]);
        } else {
          for (const auto& p : all[k].factors) out << print_cycles(p) << '\n';
        }
      }
      return kOk;
    }

    if (*cover) {
      const DigraphInput in = load(cover_src, cover_opts);
      GroupBfsOptions go;
      go.max_elements = g.max_elems;
      go.keep_extremal = keep_extremal;
      go.with_inverses = with_inverses;
      std::optional<std::pair<int, int>> shape;
      if (shape_a > 0 && shape_b > 0) shape = std::pair{shape_a, shape_b};
      const CoveringGroup cg = covering_group(factors_of(in), go, shape);
      const GroupBfsResult& r = cg.bfs;
      if (records) {
        out << "order=" << r.order << " diameter=" << r.diameter
            << " extremal=" << r.histogram.back() << " complete=" << (r.complete ? 1 : 0) << '\n';
        for (std::size_t k = 0; k < r.histogram.size(); ++k) {
          out << "layer distance=" << k << " count=" << r.histogram[k] << '\n';
        }
      } else {
        out << "order " << r.order << " diameter " << r.diameter << " extremal "
            << r.histogram.back() << (r.complete ? "" : " (incomplete: element cap reached)")
            << '\n';
        for (std::size_t k = 0; k < r.histogram.size(); ++k) {
          out << "distance " << k << " count " << r.histogram[k] << '\n';
        }
      }
      if (cg.divides_universal_order) {
        out << (records ? "divides_universal=" : "divides a!(b!)^a: ")
            << (*cg.divides_universal_order ? "yes" : "no") << '\n';
      }
      for (const auto& p : r.extremal) out << (records ? "extremal cycles=" : "") << print_cycles(p) << '\n';
      return r.complete ? kOk : kResourceCap;
    }

    if (*cdd) {
      CddParams p = cdd_from_flags(cdd_file, cdd_a, cdd_b, cdd_pi, cdd_t);
      for (int k = 0; k < cdd_shift; ++k) p = shift_isomorphism(p);
      const CddDigraph d = cdd_build(p);
      const int diam_value = cdd_diameter(p);
      if (records) {
        out << "a=" << p.a() << " b=" << p.b() << " pi=" << print_cycles(p.pi())
            << " t=" << join_ints(p.t(), ",") << " diameter=" << diam_value << '\n';
        out << "companion cycles=" << print_cycles(d.y) << '\n';
      } else {
        write_cdd_params(out, p);
        out << "Y " << print_cycles(d.y) << '\n' << "diameter " << diam_value << '\n';
      }
      if (cdd_gcd) {
        const GcdPair pair = cdd_to_gcd(p);
        out << (records ? "gcd Z=" : "Z ") << print_cycles(flatten(pair.z))
            << (records ? " T=" : "\nT ") << print_cycles(flatten(pair.t)) << '\n';
      }
      if (!cdd_out.empty()) {
        Factorization f;
        f.factors = {d.z, d.y};
        write_file(cdd_out + ".dg", render([&](std::ostream& o) { write_digraph(o, d.digraph); }));
        write_file(cdd_out + ".fac", render([&](std::ostream& o) { write_factorization(o, f); }));
        write_file(cdd_out + ".cdd", render([&](std::ostream& o) { write_cdd_params(o, p); }));
      }
      return kOk;
    }

    if (*srch) {
      if (degree != 2) throw DomainError("search: only degree 2 is supported");
      spec.mode = parse_search_mode(mode);
      spec.dedup = !no_dedup;
      spec.threads = g.threads;
      const SearchResult r = search(spec);
      if (!search_out.empty()) std::filesystem::create_directories(search_out);
      out << (records ? "" : "# class |Aut| reciprocal cycle_type diameter Y\n");
      for (std::size_t k = 0; k < r.representatives.size(); ++k) {
        const ClassSummary s = summarize(r.representatives[k]);
        if (records) {
          out << "class index=" << k << " aut=" << s.aut_order << " reciprocal=" << s.reciprocal_edges
              << " cycle_type=" << join_ints(s.cycle_type, ",") << " diameter=" << s.diameter
              << " Y=" << print_cycles(s.y) << '\n';
        } else {
          out << k << ' ' << s.aut_order << ' ' << s.reciprocal_edges << ' '
              << join_ints(s.cycle_type, ",") << ' ' << s.diameter << ' ' << print_cycles(s.y)
              << '\n';
        }
        if (!search_out.empty()) {
          Factorization f;
          f.factors = {Permutation::rotation(spec.n), s.y};
          write_file(std::filesystem::path(search_out) / ("class_" + std::to_string(k) + ".fac"),
                     render([&](std::ostream& o) { write_factorization(o, f); }));
        }
      }
      out << (records ? "stats" : "#") << " classes=" << r.representatives.size()
          << " nodes=" << r.stats.nodes << " pruned=" << r.stats.pruned
          << " complete=" << (r.complete ? 1 : 0);
      if (spec.mode == SearchMode::kRandom) out << " best_deficit=" << r.stats.best_deficit;
      out << '\n';
      return r.complete ? kOk : kResourceCap;
    }

    if (*ver) {
      if (list_claims) {
        for (const auto& c : claim_catalog()) {
          out << c.id << " [" << c.group << "] " << c.description << '\n';
        }
        return kOk;
      }
      vopts.only = only;
      vopts.threads = g.threads;
      vopts.max_elements = g.max_elems;
      const VerifyReport rep = run_verify(vopts);
      for (const auto& r : rep.results) {
        if (records) {
          out << "claim id=" << r.id << " status=" << to_string(r.status)
              << " seconds=" << r.seconds << " details=\"" << r.details << "\"\n";
        } else {
          out << '[' << to_string(r.status) << "] " << r.id << ": " << r.description << '\n';
          if (!r.details.empty()) out << "    " << r.details << '\n';
        }
      }
      out << (records ? "summary" : "summary:") << " pass=" << rep.count(ClaimStatus::kPass)
          << " fail=" << rep.count(ClaimStatus::kFail)
          << " flagged-typo=" << rep.count(ClaimStatus::kFlaggedTypo)
          << " skipped-scale=" << rep.count(ClaimStatus::kSkippedScale) << '\n';
      return rep.ok() ? kOk : kClaimFailure;
    }
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return kUsage;
  }
  return kUsage;
}

}  // namespace dgdd::cli
