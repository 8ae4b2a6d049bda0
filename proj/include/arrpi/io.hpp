#pragma once

#include <fstream>
#include <nlohmann/json.hpp>
#include <string>
#include <vector>

#include "arrpi/classify.hpp"
#include "arrpi/errors.hpp"
#include "arrpi/geometry.hpp"
#include "arrpi/presentation.hpp"

namespace arrpi {

using nlohmann::json;

// Arrangement files: {"lines": [{"label": "L1", "a": "1/2", "b": "-3"}, ...]}
// where a and b are rationals written as "p/q" strings or plain integers.
inline Arrangement parse_arrangement(const json& doc) {
  if (!doc.is_object() || !doc.contains("lines") || !doc["lines"].is_array())
    throw ParseError("arrangement document must be an object with a 'lines' array");
  auto rational_field = [](const json& obj, const char* key) {
    if (!obj.contains(key)) throw ParseError(std::string("line entry missing field '") + key + "'");
    const json& v = obj[key];
    if (v.is_string()) return parse_rational(v.get<std::string>());
    if (v.is_number_integer()) return Rational(Int(v.get<long long>()));
    throw ParseError(std::string("field '") + key + "' must be an integer or a 'p/q' string");
  };
  std::vector<Line> lines;
  int counter = 0;
  for (const json& entry : doc["lines"]) {
    ++counter;
    if (!entry.is_object()) throw ParseError("line entries must be objects");
    std::string label = entry.contains("label") ? entry["label"].get<std::string>()
                                                : "L" + std::to_string(counter);
    lines.push_back(Line{label, rational_field(entry, "a"), rational_field(entry, "b")});
  }
  return Arrangement(std::move(lines));
}

inline Arrangement load_arrangement(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw ParseError("cannot open arrangement file '" + path + "'");
  json doc;
  try {
    in >> doc;
  } catch (const json::exception& e) {
    throw ParseError("invalid JSON in '" + path + "': " + e.what());
  }
  return parse_arrangement(doc);
}

// Braid words serialize as signed integer lists, [1, 2, 1, 1, 2, 1] etc.
inline json braid_to_json(const BraidWord& b) { return json(b.word); }

inline json word_to_json(const FreeWord& w) { return json(w.letters()); }

inline json relation_origin_json(const Relation& r) {
  if (r.origin == 0) return json("projective");
  return json(r.origin);
}

inline json presentation_to_json(const Presentation& p) {
  json rels = json::array();
  for (const Relation& r : p.relations)
    rels.push_back({{"lhs", word_to_json(r.lhs)},
                    {"rhs", word_to_json(r.rhs)},
                    {"origin", relation_origin_json(r)}});
  return json{{"gens", p.n_generators}, {"mode", mode_name(p.mode)}, {"relations", rels}};
}

inline std::string presentation_to_text(const Presentation& p) {
  std::string out = "gens: " + std::to_string(p.n_generators) + "\n";
  for (const Relation& r : p.relations) out += r.lhs.str() + " = " + r.rhs.str() + "\n";
  return out;
}

inline json structure_to_json(const GroupStructure& s) {
  return json{{"free_ranks", s.free_ranks}, {"abelian_rank", s.abelian_rank}};
}

inline json classes_to_json(const MultiplePointGraph& g,
                            const std::vector<SingularPoint>& points) {
  json classes = json::array();
  for (const PointClass& cls : g.classes) {
    json pts = json::array();
    for (int pi : cls.points)
      pts.push_back({{"x", to_string(points[pi].x)},
                     {"y", to_string(points[pi].y)},
                     {"multiplicity", points[pi].multiplicity}});
    json c{{"points", pts}, {"lines", cls.lines}, {"collinear", cls.collinear}};
    if (cls.connecting_line) c["connecting_line"] = *cls.connecting_line;
    classes.push_back(std::move(c));
  }
  return classes;
}

}  // namespace arrpi
