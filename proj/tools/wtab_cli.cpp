// Copyright 2026 The wtab Authors
//
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

// wtab: command-line front end.
//
// Exit status: 0 success, 1 verification found failing criteria, 2 domain
// error (bad table, disagreement, ambiguity, cap exceeded), 64 usage error.

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>

#include "wtab/acceptance.hpp"
#include "wtab/cache.hpp"
#include "wtab/io.hpp"

namespace {

using namespace wtab;

constexpr int kExitVerifyFailed = 1;
constexpr int kExitDomain = 2;
constexpr int kExitUsage = 64;

/// Thrown for malformed arguments detected after CLI11 has parsed them.
struct UsageError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Globals {
  std::string format = "ascii";
  std::string cache_dir;
  bool no_cache = false;
  int workers = 1;
  std::size_t cap = kDefaultTauCap;
};

std::string default_cache_dir() {
  if (const char* x = std::getenv("XDG_CACHE_HOME"); x && *x) return std::string(x) + "/wtab";
  if (const char* h = std::getenv("HOME"); h && *h) return std::string(h) + "/.cache/wtab";
  return ".wtab-cache";
}

std::optional<ResultCache> open_cache(const Globals& g) {
  if (g.no_cache) return std::nullopt;
  return ResultCache(g.cache_dir.empty() ? default_cache_dir() : g.cache_dir);
}

/// "@path" reads a file, "-" reads stdin, anything else is literal.
std::string read_arg(const std::string& v) {
  if (v == "-") return {std::istreambuf_iterator<char>(std::cin), std::istreambuf_iterator<char>()};
  if (!v.empty() && v.front() == '@') {
    std::ifstream in(v.substr(1));
    if (!in) throw UsageError("cannot read " + v.substr(1));
    return {std::istreambuf_iterator<char>(in), std::istreambuf_iterator<char>()};
  }
  return v;
}

/// "1,-2,3/2" or a JSON array.
Word parse_word(const std::string& raw) {
  const std::string text = read_arg(raw);
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '[') return word_from_json(json::parse(text));
  Word w;
  std::string cleaned = text;
  std::replace(cleaned.begin(), cleaned.end(), ',', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) w.push_back(HalfInt::parse(tok));
  return w;
}

Partition parse_partition(const std::string& text) {
  std::vector<int> parts;
  for (HalfInt x : parse_word(text)) {
    if (!x.is_integer() || x.as_int() <= 0) throw UsageError("partition parts must be positive integers: " + text);
    parts.push_back(x.as_int());
  }
  if (parts.empty()) throw UsageError("empty partition");
  return Partition(parts);
}

/// A JSON object {"gtype", "rows"}, a bare JSON row list (type from
/// --gtype), or an ASCII rendering.
STable parse_table(const std::string& raw, const std::string& gtype) {
  const std::string text = read_arg(raw);
  const auto first = text.find_first_not_of(" \t\n");
  if (first == std::string::npos) throw UsageError("empty table");
  if (text[first] == '{') return stable_from_json(json::parse(text));
  if (text[first] == '[') {
    STable t{parse_gtype(gtype), rows_from_json(json::parse(text))};
    require_valid(t);
    return t;
  }
  const AsciiObject obj = parse_ascii(text);
  if (!std::holds_alternative<STable>(obj)) throw UsageError("expected an s-table");
  return std::get<STable>(obj);
}

DominoTableau parse_domino(const std::string& raw) {
  const std::string text = read_arg(raw);
  const auto first = text.find_first_not_of(" \t\n");
  if (first != std::string::npos && text[first] == '{') return domino_from_json(json::parse(text));
  const AsciiObject obj = parse_ascii(text);
  if (!std::holds_alternative<DominoTableau>(obj)) throw UsageError("expected a domino tableau");
  return std::get<DominoTableau>(obj);
}

Cycle parse_cycle(const std::string& text) {
  Cycle c;
  for (HalfInt x : parse_word(text)) {
    if (!x.is_integer()) throw UsageError("cycle labels are integers");
    c.insert(x.as_int());
  }
  return c;
}

/// The orbit shape whose pyramid has the table's row lengths.
OrbitShape shape_of(const STable& t) {
  std::vector<int> parts;
  for (const Word& r : t.rows) {
    if (!r.empty()) parts.push_back(static_cast<int>(r.size()));
  }
  OrbitShape s = validate_orbit_partition(Partition(parts), t.gtype);
  if (s.row_lengths() != t.row_lengths()) {
    throw Error(ErrorCode::kInvalidArgument, "row lengths of " + stable_str(t) + " are not those of a pyramid for " +
                                                 s.bp.str());
  }
  return s;
}

bool as_json(const Globals& g) {
  if (g.format != "json" && g.format != "ascii") throw UsageError("--format must be json or ascii");
  return g.format == "json";
}

void print(const json& j) { std::cout << j.dump(2) << "\n"; }

json cycles_json(const std::vector<Cycle>& cs) {
  json out = json::array();
  for (const Cycle& c : cs) out.push_back(std::vector<int>(c.begin(), c.end()));
  return out;
}

std::string cycles_text(const std::vector<Cycle>& cs) {
  std::string out;
  for (const Cycle& c : cs) {
    out += out.empty() ? "{" : " {";
    bool first = true;
    for (int x : c) {
      out += (first ? "" : ",") + std::to_string(x);
      first = false;
    }
    out += "}";
  }
  return out.empty() ? "(none)" : out;
}

// ---------------------------------------------------------------------------
// Subcommands.

int run_rs(const Globals& g, const std::string& word) {
  const Tableau t = rs_insert(parse_word(word));
  if (as_json(g)) {
    print(to_json(t));
  } else {
    std::cout << render(t) << "shape " << t.shape().str() << "\n";
  }
  return 0;
}

int run_bv(const Globals& g, const std::string& weight, const std::string& gtype, const std::string& variant,
           bool trace) {
  const Weight mu = parse_word(weight);
  const GType gt = parse_gtype(gtype);
  BvTrace tr;
  if (variant == "auto") {
    tr = bv_trace(mu, gt);
  } else if (variant == "raw" || variant == "prime") {
    tr = bv_trace(mu, variant == "prime", bv_variant(gt));
  } else {
    throw UsageError("--variant must be auto, raw or prime");
  }
  if (as_json(g)) {
    json j{{"weight", to_json(mu)}, {"result", to_json(tr.result)}};
    if (trace) {
      j["doubled"] = to_json(tr.doubled);
      j["q"] = to_json(tr.q);
      j["u"] = tr.u;
      j["s"] = tr.s;
      j["t"] = tr.t;
      j["v"] = tr.v;
    }
    print(j);
    return 0;
  }
  if (trace) {
    auto ints = [](const std::vector<int>& v) {
      std::string s;
      for (int x : v) s += (s.empty() ? "" : " ") + std::to_string(x);
      return "(" + s + ")";
    };
    std::cout << "doubled " << word_str(tr.doubled) << "\nq " << tr.q.str() << "\nu " << ints(tr.u) << "\ns "
              << ints(tr.s) << "\nt " << ints(tr.t) << "\nv " << ints(tr.v) << "\n";
  }
  std::cout << tr.result.str() << "\n";
  return 0;
}

int run_tau_class(const Globals& g, const std::string& weight, bool members, bool ideal) {
  const Weight mu = parse_word(weight);
  const std::string mode = ideal ? "ideal" : "plain";
  const CacheKey key{"tau-class", '-', word_str(mu), "-", mode + ":" + std::to_string(g.cap)};
  auto cache = open_cache(g);
  json j;
  if (auto hit = cache ? cache->load(key) : std::nullopt) {
    j = *hit;
  } else {
    std::vector<Weight> ms;
    if (ideal) {
      ms = ideal_class_members(mu, g.cap);
    } else {
      ms = tau_class(mu, g.cap).members;
    }
    json arr = json::array();
    for (const Weight& w : ms) arr.push_back(to_json(w));
    j = {{"weight", to_json(mu)},
         {"mode", mode},
         {"non_regular", is_non_regular(mu)},
         {"count", ms.size()},
         {"fingerprint", to_json(ms.front())},
         {"members", arr}};
    if (cache) cache->store(key, j);
  }
  if (!members) j.erase("members");
  if (as_json(g)) {
    print(j);
  } else {
    std::cout << "count " << j.at("count").get<std::size_t>() << "\nfingerprint "
              << word_str(word_from_json(j.at("fingerprint"))) << "\n";
    if (j.at("non_regular").get<bool>()) std::cout << "note: weight is singular (repeated or zero |entries|)\n";
    if (members) {
      for (const auto& w : j.at("members")) std::cout << word_str(word_from_json(w)) << "\n";
    }
  }
  return 0;
}

int run_domino_dt(const Globals& g, const std::string& word) {
  const Tableau t = rs_insert(parse_word(word));
  auto d = dt(t);
  if (!d) throw Error(ErrorCode::kInvalidArgument, "the domino algorithm is undefined on this tableau");
  if (as_json(g)) {
    print(to_json(*d));
  } else {
    std::cout << render(*d);
  }
  return 0;
}

int run_domino_cycles(const Globals& g, const std::string& tab) {
  const auto cs = cycles(parse_domino(tab));
  if (as_json(g)) {
    print(cycles_json(cs));
  } else {
    std::cout << cycles_text(cs) << "\n";
  }
  return 0;
}

int run_domino_mt(const Globals& g, const std::string& tab, const std::vector<std::string>& cyc) {
  if (cyc.empty()) throw UsageError("give at least one --cycle");
  std::vector<Cycle> seq;
  for (const auto& c : cyc) seq.push_back(parse_cycle(c));
  const DominoTableau out = move_through(parse_domino(tab), seq);
  if (as_json(g)) {
    print(to_json(out));
  } else {
    std::cout << render(out);
  }
  return 0;
}

int run_domino_compare(const Globals& g, const std::string& word) {
  const Word a = parse_word(word);
  const DominoTableau g0 = garfinkle(a, GarfinkleVariant::kG0);
  const DominoTableau g1 = garfinkle(a, GarfinkleVariant::kG1);
  const auto seq = find_cycle_sequence(g0, g1);
  if (as_json(g)) {
    json j{{"g0", to_json(g0)}, {"g1", to_json(g1)}};
    j["cycles"] = seq ? cycles_json(*seq) : json(nullptr);
    print(j);
  } else {
    std::cout << "G0\n" << render(g0) << "G1\n" << render(g1) << "cycle sequence "
              << (seq ? cycles_text(*seq) : std::string("not found")) << "\n";
  }
  return seq ? 0 : kExitDomain;
}

void print_step(const std::string& name, const std::optional<STable>& t) {
  std::cout << name << "\n" << (t ? render(*t) : std::string("undefined\n"));
}

void print_plain(const std::string& name, const std::optional<PlainTable>& t) {
  std::cout << name << "\n" << (t ? render(PlainTableText{*t}) : std::string("undefined\n"));
}

void print_three_row_trace(const STable& a, const OrbitShape& s, const ActionContext& ctx) {
  switch (three_row_kind(s)) {
    case ThreeRowKind::kTrivial:
      std::cout << "trivial action on this shape\n";
      return;
    case ThreeRowKind::kSymplectic: {
      const SymplecticTrace tr = symplectic_pipeline(a, s, ctx);
      print_step("A'", tr.a_prime);
      print_step("s1 A'", tr.s1);
      if (tr.sharp) std::cout << "sharp element " << tr.sharp->str() << "\n";
      print_step("c' s1 A'", tr.c_prime);
      print_step("s1 c' s1 A'", tr.s1_c_prime);
      print_step("pipeline c.A", tr.result);
      return;
    }
    case ThreeRowKind::kOrthogonal: {
      const OrthogonalTrace tr = orthogonal_pipeline(a);
      print_plain("A^{L+}", tr.l_plus);
      print_plain("A^{L-}", tr.l_minus);
      std::cout << "case " << tr.which_case << "\n";
      print_plain(tr.which_case == 2 ? "s2 s1 s2 A^{L+}" : "s2 s1 s2 A^{L-}", tr.swapped);
      print_step("pipeline c.A", tr.result);
      return;
    }
  }
}

int run_caction(const Globals& g, const std::string& table, const std::string& gtype, const std::string& strategy,
                int generator, bool trace) {
  const STable a = sort_rows(parse_table(table, gtype));
  const OrbitShape s = shape_of(a);
  const ActionStrategy st = parse_strategy(strategy);
  TauIndex tau(g.cap);
  SharpLog log;
  const ActionContext ctx{&tau, &log};
  if (trace && !as_json(g)) {
    print_step("A", a);
    if (s.r() == 1) {
      print_three_row_trace(a, s, ctx);
    } else {
      const auto moved = apply_swap_word(a, conjugating_swaps(s, generator));
      print_step("conjugated A", moved);
    }
  }
  const auto out = c_k_action(a, s, generator, st, ctx);
  if (!out) throw Error(ErrorCode::kInvalidArgument, "the action is undefined on " + stable_str(a));
  if (as_json(g)) {
    json j{{"input", to_json(a)}, {"generator", generator}, {"strategy", strategy_name(st)}, {"result", to_json(*out)}};
    json sharps = json::array();
    for (const auto& r : log.records()) sharps.push_back({{"row", to_json(r.row)}, {"element", to_json(r.element)}});
    j["sharp_selections"] = sharps;
    print(j);
  } else {
    print_step("c.A", out);
  }
  return 0;
}

int run_classify(const Globals& g, const std::string& gtype, const std::string& partition, const std::string& bound,
                 const std::string& method, const std::string& parity) {
  const GType gt = parse_gtype(gtype);
  const OrbitShape s = validate_orbit_partition(parse_partition(partition), gt);
  const HalfInt b = HalfInt::parse(bound);
  ClassifyOptions opt;
  opt.method = parse_method(method);
  opt.workers = g.workers;
  opt.tau_cap = g.cap;
  if (parity == "integer") {
    opt.parities = {Parity::kInteger};
  } else if (parity == "half") {
    if (gt == GType::C) throw UsageError("type C tables are integral");
    opt.parities = {Parity::kHalfInteger};
  } else if (parity != "all") {
    throw UsageError("--parity must be all, integer or half");
  }
  const CacheKey key{"classify", gtype_char(gt), s.bp.str(), b.str(), std::string(method_name(opt.method)) + ":" + parity};
  auto cache = open_cache(g);
  ClassificationReport rep;
  if (auto hit = cache ? cache->load(key) : std::nullopt) {
    rep = report_from_json(*hit);
  } else {
    rep = classify(s, b, opt);
    if (cache) cache->store(key, to_json(rep));
  }
  if (as_json(g)) {
    print(to_json(rep));
  } else {
    std::cout << render(rep);
  }
  return 0;
}

int run_verify(const Globals& g, std::uint64_t seed, const std::vector<int>& only) {
  AcceptanceOptions opt;
  opt.seed = seed;
  opt.workers = g.workers;
  opt.only.insert(only.begin(), only.end());
  json results = json::array();
  int failed = 0;
  run_acceptance(opt, [&](const CriterionResult& r) {
    failed += r.passed ? 0 : 1;
    if (as_json(g)) {
      results.push_back({{"id", r.id},
                         {"name", r.name},
                         {"passed", r.passed},
                         {"detail", r.detail},
                         {"seconds", r.seconds},
                         {"limit_seconds", r.limit_seconds}});
    } else {
      std::cout << format_result(r) << std::endl;
    }
  });
  if (as_json(g)) print(results);
  return failed == 0 ? 0 : kExitVerifyFailed;
}

/// JSON in, ASCII out, or (with --to json) ASCII in, JSON out.
int run_render(const std::string& input, const std::string& to) {
  const std::string text = read_arg(input);
  if (to == "ascii") {
    const json j = json::parse(text);
    if (j.is_object() && j.contains("dominos")) {
      std::cout << render(domino_from_json(j));
    } else if (j.is_object() && j.contains("gtype")) {
      std::cout << render(stable_from_json(j));
    } else if (j.is_object() && j.contains("rows")) {
      std::cout << render(tableau_from_json(j));
    } else if (j.is_array()) {
      std::cout << render(PlainTableText{rows_from_json(j)});
    } else {
      throw UsageError("unrecognised JSON object");
    }
    return 0;
  }
  if (to != "json") throw UsageError("--to must be ascii or json");
  const AsciiObject obj = parse_ascii(text);
  std::visit(
      [](const auto& x) {
        if constexpr (std::is_same_v<std::decay_t<decltype(x)>, PlainTableText>) {
          print(rows_to_json(x.rows));
        } else {
          print(to_json(x));
        }
      },
      obj);
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"wtab: s-tables, component-group actions and finite-dimensional W-algebra modules"};
  app.require_subcommand(1);
  app.set_config("--config", "", "TOML/INI file with option defaults; [section] names match subcommands");
  app.set_version_flag("--version", std::string(WTAB_VERSION));

  Globals g;
  app.add_option("--format", g.format, "Output format")->check(CLI::IsMember({"ascii", "json"}))->capture_default_str();
  app.add_option("--cache-dir", g.cache_dir, "Directory of the result cache");
  app.add_flag("--no-cache", g.no_cache, "Neither read nor write cached results");
  app.add_option("--workers", g.workers, "Worker threads for enumeration")->check(CLI::PositiveNumber)->capture_default_str();
  app.add_option("--cap", g.cap, "Largest tau class to explore")->check(CLI::PositiveNumber)->capture_default_str();
  app.fallthrough();

  std::function<int()> action;

  std::string word;
  auto* rs = app.add_subcommand("rs", "Robinson-Schensted insertion tableau of a word");
  rs->add_option("word", word, "Entries, e.g. 2,-1,3/2 (or a JSON array, @file, -)")->required();
  rs->callback([&] { action = [&] { return run_rs(g, word); }; });

  std::string weight;
  std::string gtype = "C";
  std::string variant = "auto";
  bool trace = false;
  auto* bvc = app.add_subcommand("bv", "Barbasch-Vogan partition of a weight");
  bvc->add_option("weight", weight, "Weight entries")->required();
  bvc->add_option("--gtype", gtype, "B or C")->capture_default_str();
  bvc->add_option("--variant", variant, "auto (by type), raw or prime")->capture_default_str();
  bvc->add_flag("--trace", trace, "Show q, content, u, s, t and v");
  bvc->callback([&] { action = [&] { return run_bv(g, weight, gtype, variant, trace); }; });

  bool members = false;
  bool ideal = false;
  auto* tc = app.add_subcommand("tau-class", "Size and fingerprint of a tau-equivalence class");
  tc->add_option("weight", weight, "Weight entries")->required();
  tc->add_flag("--members", members, "List every member");
  tc->add_flag("--ideal", ideal, "Use the primitive-ideal class (regularized for singular weights)");
  tc->callback([&] { action = [&] { return run_tau_class(g, weight, members, ideal); }; });

  std::string tab;
  std::vector<std::string> cyc;
  auto* dom = app.add_subcommand("domino", "Domino tableaux");
  dom->require_subcommand(1);
  auto* ddt = dom->add_subcommand("dt", "Domino tableau of the insertion tableau of a signed word");
  ddt->add_option("word", word, "Word")->required();
  ddt->callback([&] { action = [&] { return run_domino_dt(g, word); }; });
  auto* dcy = dom->add_subcommand("cycles", "Cycles of a domino tableau");
  dcy->add_option("tableau", tab, "Domino tableau (JSON, ASCII grid, @file, -)")->required();
  dcy->callback([&] { action = [&] { return run_domino_cycles(g, tab); }; });
  auto* dmt = dom->add_subcommand("mt", "Move through one or more cycles");
  dmt->add_option("tableau", tab, "Domino tableau")->required();
  dmt->add_option("--cycle", cyc, "Cycle labels, e.g. 2,3 (repeat for a sequence)")->required();
  dmt->callback([&] { action = [&] { return run_domino_mt(g, tab, cyc); }; });
  auto* dcm = dom->add_subcommand("compare", "Both domino insertions of a signed permutation and a connecting cycle sequence");
  dcm->add_option("word", word, "Signed permutation")->required();
  dcm->callback([&] { action = [&] { return run_domino_compare(g, word); }; });

  std::string table;
  std::string strategy = "oracle";
  int generator = 1;
  auto* ca = app.add_subcommand("caction", "Component-group generator acting on an s-table");
  ca->add_option("table", table, "s-table (JSON object, JSON rows with --gtype, ASCII, @file, -)")->required();
  ca->add_option("--gtype", gtype, "Type for bare JSON rows")->capture_default_str();
  ca->add_option("--strategy", strategy, "oracle, pipeline or both")->capture_default_str();
  ca->add_option("--generator", generator, "Generator index k")->capture_default_str();
  ca->add_flag("--trace", trace, "Print every intermediate table");
  ca->callback([&] { action = [&] { return run_caction(g, table, gtype, strategy, generator, trace); }; });

  std::string partition;
  std::string bound;
  std::string method = "bv";
  std::string parity = "all";
  auto* cl = app.add_subcommand("classify", "Finite-dimensional tables up to a bound, grouped into orbits");
  cl->add_option("--gtype", gtype, "B or C")->required();
  cl->add_option("--partition", partition, "Orbit partition, e.g. 5,5,4,2,2")->required();
  cl->add_option("--bound", bound, "Largest |entry|")->required();
  cl->add_option("--method", method, "bv, conjugacy or both")->capture_default_str();
  cl->add_option("--parity", parity, "all, integer or half")->capture_default_str();
  cl->callback([&] { action = [&] { return run_classify(g, gtype, partition, bound, method, parity); }; });

  std::uint64_t seed = AcceptanceOptions{}.seed;
  std::vector<int> only;
  auto* ver = app.add_subcommand("verify", "Run the acceptance suite");
  ver->add_option("--seed", seed, "Seed for the randomized checks")->capture_default_str();
  ver->add_option("--only", only, "Criterion numbers to run")->check(CLI::Range(1, 12));
  ver->callback([&] { action = [&] { return run_verify(g, seed, only); }; });

  std::string input;
  std::string to = "ascii";
  auto* rd = app.add_subcommand("render", "Convert between JSON and ASCII drawings");
  rd->add_option("input", input, "Object (literal, @file or -)")->required();
  rd->add_option("--to", to, "ascii or json")->capture_default_str();
  rd->callback([&] { action = [&] { return run_render(input, to); }; });

  try {
    app.parse(argc, argv);
  } catch (const CLI::Success& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }
  try {
    return action();
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return kExitUsage;
  } catch (const json::exception& e) {
    std::cerr << "usage error: malformed JSON: " << e.what() << "\n";
    return kExitUsage;
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return e.code() == ErrorCode::kParse ? kExitUsage : kExitDomain;
  }
}
