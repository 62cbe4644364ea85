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

#pragma once

#include <algorithm>
#include <map>
#include <sstream>
#include <string>
#include <variant>
#include <vector>

#include <json.hpp>

#include "wtab/classifier.hpp"
#include "wtab/domino.hpp"
#include "wtab/error.hpp"
#include "wtab/half_int.hpp"
#include "wtab/partition.hpp"
#include "wtab/stable.hpp"
#include "wtab/word.hpp"

namespace wtab {

using json = nlohmann::json;

// ---------------------------------------------------------------------------
// JSON.  Integers are JSON numbers; half-integers are strings such as "-3/2"
// so that every value round-trips exactly.

inline json to_json(HalfInt h) {
  if (h.is_integer()) return h.as_int();
  return h.str();
}

inline HalfInt half_int_from_json(const json& j) {
  if (j.is_number_integer()) return HalfInt(j.get<int>());
  if (j.is_string()) return HalfInt::parse(j.get<std::string>());
  if (j.is_number_float()) {
    const double d = j.get<double>() * 2;
    if (d != static_cast<double>(static_cast<int>(d))) throw Error(ErrorCode::kParse, "not a half-integer: " + j.dump());
    return HalfInt::from_doubled(static_cast<int>(d));
  }
  throw Error(ErrorCode::kParse, "expected a number, got " + j.dump());
}

inline json to_json(const Word& w) {
  json a = json::array();
  for (HalfInt x : w) a.push_back(to_json(x));
  return a;
}

inline Word word_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array, got " + j.dump());
  Word w;
  for (const auto& x : j) w.push_back(half_int_from_json(x));
  return w;
}

inline json rows_to_json(const std::vector<Word>& rows) {
  json a = json::array();
  for (const auto& r : rows) a.push_back(to_json(r));
  return a;
}

inline std::vector<Word> rows_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected an array of rows");
  std::vector<Word> rows;
  for (const auto& r : j) rows.push_back(word_from_json(r));
  return rows;
}

inline json to_json(const Partition& p) { return p.parts(); }

inline Partition partition_from_json(const json& j) {
  if (!j.is_array()) throw Error(ErrorCode::kParse, "expected a partition array");
  return Partition(j.get<std::vector<int>>());
}

inline json to_json(const STable& t) { return {{"gtype", std::string(1, gtype_char(t.gtype))}, {"rows", rows_to_json(t.rows)}}; }

inline STable stable_from_json(const json& j) {
  if (!j.is_object() || !j.contains("rows")) throw Error(ErrorCode::kParse, "expected {\"gtype\", \"rows\"}");
  STable t;
  t.gtype = parse_gtype(j.value("gtype", std::string("C")));
  t.rows = rows_from_json(j.at("rows"));
  require_valid(t);
  return t;
}

inline json to_json(const Tableau& t) { return {{"rows", rows_to_json(t.rows)}, {"shape", to_json(t.shape())}}; }

inline Tableau tableau_from_json(const json& j) { return Tableau{rows_from_json(j.at("rows"))}; }

inline json to_json(const DominoTableau& t) {
  json ds = json::array();
  for (const auto& [lab, d] : t.dominos) {
    ds.push_back({{"label", lab}, {"cells", {{d.first.row, d.first.col}, {d.second.row, d.second.col}}}});
  }
  return {{"zero_cell", t.zero_cell}, {"dominos", ds}, {"shape", to_json(t.shape())}};
}

inline DominoTableau domino_from_json(const json& j) {
  DominoTableau t;
  t.zero_cell = j.value("zero_cell", false);
  for (const auto& d : j.at("dominos")) {
    const auto& c = d.at("cells");
    t.dominos[d.at("label").get<int>()] =
        make_domino({c.at(0).at(0).get<int>(), c.at(0).at(1).get<int>()}, {c.at(1).at(0).get<int>(), c.at(1).at(1).get<int>()});
  }
  if (auto v = domino_violation(t)) throw Error(ErrorCode::kParse, "invalid domino tableau: " + *v);
  return t;
}

// ---------------------------------------------------------------------------
// ASCII.  Every rendering starts with a header line naming the object kind;
// parse_ascii inverts render exactly.

using PlainRows = std::vector<Word>;

struct PlainTableText {
  PlainRows rows;
  bool operator==(const PlainTableText&) const = default;
};

using AsciiObject = std::variant<STable, Tableau, DominoTableau, PlainTableText>;

namespace detail {

inline std::size_t cell_width(const std::vector<Word>& rows) {
  std::size_t w = 1;
  for (const auto& r : rows) {
    for (HalfInt x : r) w = std::max(w, x.str().size());
  }
  return w;
}

inline std::string pad_left(const std::string& s, std::size_t w) { return std::string(w - std::min(w, s.size()), ' ') + s; }

inline std::string render_rows(const std::vector<Word>& rows, bool centred) {
  std::size_t longest = 0;
  for (const auto& r : rows) longest = std::max(longest, r.size());
  // Even cell pitch so that half-cell offsets land on whole characters.
  std::size_t pitch = cell_width(rows) + 1;
  if (pitch % 2) ++pitch;
  std::string out;
  for (const auto& r : rows) {
    std::string line = centred ? std::string((longest - r.size()) * pitch / 2, ' ') : std::string();
    line += "|";
    for (HalfInt x : r) line += pad_left(x.str(), pitch - 1) + "|";
    out += line + "\n";
  }
  return out;
}

inline Word parse_row(const std::string& line) {
  Word w;
  std::string cleaned = line;
  std::replace(cleaned.begin(), cleaned.end(), '|', ' ');
  std::istringstream in(cleaned);
  std::string tok;
  while (in >> tok) w.push_back(HalfInt::parse(tok));
  return w;
}

inline std::vector<std::string> lines_of(const std::string& text) {
  std::vector<std::string> lines;
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (!line.empty() && line.back() == '\r') line.pop_back();
    lines.push_back(line);
  }
  while (!lines.empty() && lines.back().find_first_not_of(' ') == std::string::npos) lines.pop_back();
  return lines;
}

}  // namespace detail

/// Pyramid drawing: rows centred, top row first.
inline std::string render(const STable& t) {
  return std::string("stable ") + gtype_char(t.gtype) + "\n" + detail::render_rows(t.rows, true);
}

/// Left-justified, first row on top.
inline std::string render(const Tableau& t) { return "tableau\n" + detail::render_rows(t.rows, false); }

inline std::string render(const PlainTableText& t) { return "table\n" + detail::render_rows(t.rows, false); }

/// Grid of labels, highest row on top, "0" for the zero cell and "." for a
/// hole in the bounding box (never present in a valid tableau).
inline std::string render(const DominoTableau& t) {
  const auto g = t.grid();
  int rows = 0;
  int cols = 0;
  int width = 1;
  for (const auto& [c, lab] : g) {
    rows = std::max(rows, c.row);
    cols = std::max(cols, c.col);
    width = std::max(width, static_cast<int>(std::to_string(lab).size()));
  }
  std::string out = "domino\n";
  for (int r = rows; r >= 1; --r) {
    std::string line;
    for (int c = 1; c <= cols; ++c) {
      auto it = g.find({r, c});
      if (it == g.end()) continue;
      if (!line.empty()) line += ' ';
      line += detail::pad_left(std::to_string(it->second), static_cast<std::size_t>(width));
    }
    out += line + "\n";
  }
  return out;
}

inline std::string render(const AsciiObject& obj) {
  return std::visit([](const auto& x) { return render(x); }, obj);
}

inline DominoTableau parse_domino_grid(const std::vector<std::string>& lines) {
  std::map<int, std::vector<Cell>> cells;
  const int height = static_cast<int>(lines.size());
  for (int i = 0; i < height; ++i) {
    std::istringstream in(lines[static_cast<std::size_t>(i)]);
    std::string tok;
    int col = 0;
    while (in >> tok) {
      ++col;
      int lab = 0;
      try {
        std::size_t used = 0;
        lab = std::stoi(tok, &used);
        if (used != tok.size()) throw std::invalid_argument(tok);
      } catch (const std::logic_error&) {
        throw Error(ErrorCode::kParse, "bad domino label '" + tok + "'");
      }
      cells[lab].push_back({height - i, col});
    }
  }
  DominoTableau t;
  for (auto& [lab, cs] : cells) {
    if (lab == 0) {
      if (cs.size() != 1 || cs[0] != Cell{1, 1}) throw Error(ErrorCode::kParse, "zero cell must be the corner cell");
      t.zero_cell = true;
      continue;
    }
    if (cs.size() != 2 || !cells_adjacent(cs[0], cs[1])) {
      throw Error(ErrorCode::kParse, "label " + std::to_string(lab) + " does not occupy a domino");
    }
    t.dominos[lab] = make_domino(cs[0], cs[1]);
  }
  if (auto v = domino_violation(t)) throw Error(ErrorCode::kParse, "invalid domino tableau: " + *v);
  return t;
}

inline AsciiObject parse_ascii(const std::string& text) {
  auto lines = detail::lines_of(text);
  if (lines.empty()) throw Error(ErrorCode::kParse, "empty input");
  std::istringstream head(lines.front());
  std::string kind;
  head >> kind;
  std::vector<std::string> body(lines.begin() + 1, lines.end());
  if (kind == "domino") return parse_domino_grid(body);
  std::vector<Word> rows;
  for (const auto& l : body) rows.push_back(detail::parse_row(l));
  if (kind == "stable") {
    std::string g;
    head >> g;
    STable t{parse_gtype(g), rows};
    require_valid(t);
    return t;
  }
  if (kind == "tableau") return Tableau{rows};
  if (kind == "table") return PlainTableText{rows};
  throw Error(ErrorCode::kParse, "unknown header '" + lines.front() + "'");
}

// ---------------------------------------------------------------------------
// Classification reports.

inline json to_json(const ClassificationReport& rep) {
  json orbits = json::array();
  for (const auto& o : rep.orbits) {
    json members = json::array();
    for (const auto& m : o.members) members.push_back(rows_to_json(m.rows));
    orbits.push_back({{"members", members},
                      {"cc_representative", rows_to_json(o.cc_representative.rows)},
                      {"fingerprint", to_json(o.fingerprint)}});
  }
  json parities = json::array();
  for (Parity p : rep.parities) parities.push_back(parity_name(p));
  return {{"gtype", std::string(1, gtype_char(rep.shape.gtype))},
          {"partition", to_json(rep.shape.bp)},
          {"bound", to_json(rep.bound)},
          {"method", method_name(rep.method)},
          {"parities", parities},
          {"tables_scanned", rep.tables_scanned},
          {"finite_dimensional", rep.finite_dimensional},
          {"cc_count", rep.cc_count},
          {"orbits", orbits}};
}

inline ClassificationReport report_from_json(const json& j) {
  ClassificationReport rep;
  const GType g = parse_gtype(j.at("gtype").get<std::string>());
  rep.shape = validate_orbit_partition(partition_from_json(j.at("partition")), g);
  rep.bound = half_int_from_json(j.at("bound"));
  rep.method = parse_method(j.at("method").get<std::string>());
  for (const auto& p : j.at("parities")) {
    rep.parities.push_back(p.get<std::string>() == "integer" ? Parity::kInteger : Parity::kHalfInteger);
  }
  rep.tables_scanned = j.at("tables_scanned").get<std::size_t>();
  rep.finite_dimensional = j.at("finite_dimensional").get<std::size_t>();
  rep.cc_count = j.at("cc_count").get<std::size_t>();
  for (const auto& o : j.at("orbits")) {
    OrbitReport orb;
    for (const auto& m : o.at("members")) orb.members.push_back(STable{g, rows_from_json(m)});
    orb.cc_representative = STable{g, rows_from_json(o.at("cc_representative"))};
    orb.fingerprint = word_from_json(o.at("fingerprint"));
    rep.orbits.push_back(std::move(orb));
  }
  return rep;
}

/// Summary line followed by one block per orbit; the cc table is starred.
inline std::string render(const ClassificationReport& rep) {
  std::ostringstream out;
  out << "classification " << gtype_char(rep.shape.gtype) << " " << rep.shape.bp.str() << " bound " << rep.bound
      << " method " << method_name(rep.method) << "\n";
  out << "tables " << rep.tables_scanned << ", finite dimensional " << rep.finite_dimensional << ", cc "
      << rep.cc_count << ", orbits " << rep.orbits.size() << "\n";
  std::size_t k = 0;
  for (const auto& o : rep.orbits) {
    out << "orbit " << ++k << " fingerprint " << word_str(o.fingerprint) << "\n";
    for (const auto& m : o.members) out << (m == o.cc_representative ? "  * " : "    ") << stable_str(m) << "\n";
  }
  return out.str();
}

}  // namespace wtab
