#pragma once

#include <fstream>
#include <ostream>
#include <string>

#include "arrpi/analysis.hpp"
#include "arrpi/io.hpp"

namespace arrpi {

enum class Command { analyze, presentation, structure, verify };
enum class OutputFormat { plain, json_format };

struct RunConfig {
  std::string input_path;
  Command command = Command::analyze;
  PresentationMode mode = PresentationMode::affine;
  RelationStyle style = RelationStyle::economical;
  OutputFormat format = OutputFormat::plain;
  std::string probe = "s3";
  std::string probe_file;  // overrides `probe` when nonempty
  bool no_normalize = false;
  long long budget = kDefaultHomBudget;
};

// Exit codes: 0 success, 1 parse error, 2 geometry error, 3 structure not
// covered, 4 verification failure.
namespace exit_code {
inline constexpr int ok = 0;
inline constexpr int parse_error = 1;
inline constexpr int geometry_error = 2;
inline constexpr int not_covered = 3;
inline constexpr int verification_failure = 4;
}  // namespace exit_code

namespace detail {

inline std::string shear_str(const ShearTransform& s) { return "c = " + to_string(s.c); }

inline std::string point_line(const SingularPoint& p) {
  std::string s = "j=" + std::to_string(p.index) + " x=" + to_string(p.x) +
                  " y=" + to_string(p.y) + " m=" + std::to_string(p.multiplicity) + " pair=(" +
                  std::to_string(p.pair.k) + "," + std::to_string(p.pair.l) + ") lines=";
  for (size_t i = 0; i < p.incident.size(); ++i) {
    if (i) s += ',';
    s += p.incident[i];
  }
  return s;
}

inline std::string join(const std::vector<std::string>& v, const char* sep = ",") {
  std::string s;
  for (size_t i = 0; i < v.size(); ++i) {
    if (i) s += sep;
    s += v[i];
  }
  return s;
}

inline json analysis_to_json(const Analysis& a, const BignessWitness& big) {
  json points = json::array();
  for (const SingularPoint& p : a.points)
    points.push_back({{"j", p.index},
                      {"x", to_string(p.x)},
                      {"y", to_string(p.y)},
                      {"multiplicity", p.multiplicity},
                      {"pair", {p.pair.k, p.pair.l}},
                      {"lines", p.incident}});
  json doc{{"lines", a.n()},
           {"shear", to_string(a.shear.c)},
           {"strands", a.strands},
           {"points", points},
           {"classes", classes_to_json(a.classification.graph, a.points)},
           {"simple_only_lines", a.classification.graph.simple_only_lines},
           {"covered", a.classification.covered},
           {"big", big.big}};
  if (big.big)
    doc["big_witness"] = {{"x", to_string(big.x)},
                          {"y", to_string(big.y)},
                          {"multiplicity", big.multiplicity},
                          {"lines", big.lines}};
  return doc;
}

inline void print_analysis(std::ostream& out, const Analysis& a, const BignessWitness& big) {
  out << "lines: " << a.n() << "\n";
  out << "shear: " << shear_str(a.shear) << "\n";
  out << "strands: " << join(a.strands, " ") << "\n";
  out << "singular points: " << a.points.size() << "\n";
  for (const SingularPoint& p : a.points) out << "  " << point_line(p) << "\n";
  const MultiplePointGraph& g = a.classification.graph;
  out << "classes: " << g.classes.size() << "\n";
  for (size_t c = 0; c < g.classes.size(); ++c) {
    const PointClass& cls = g.classes[c];
    out << "  class " << c + 1 << ": points=[";
    for (size_t i = 0; i < cls.points.size(); ++i)
      out << (i ? "," : "") << a.points[cls.points[i]].index;
    out << "] lines=[" << join(cls.lines) << "] collinear=" << (cls.collinear ? "yes" : "no");
    if (cls.connecting_line) out << " via " << *cls.connecting_line;
    out << "\n";
  }
  out << "simple-only lines: " << (g.simple_only_lines.empty() ? "(none)" : join(g.simple_only_lines))
      << "\n";
  out << "covered: " << (a.classification.covered ? "yes" : "no") << "\n";
  out << "big: " << (big.big ? "yes" : "no");
  if (big.big)
    out << " (x=" << to_string(big.x) << " y=" << to_string(big.y) << " m=" << big.multiplicity
        << ")";
  out << "\n";
}

inline FiniteGroup resolve_probe(const RunConfig& cfg) {
  if (!cfg.probe_file.empty()) {
    std::ifstream in(cfg.probe_file);
    if (!in) throw ParseError("cannot open probe table '" + cfg.probe_file + "'");
    return load_probe(in, cfg.probe_file);
  }
  return probe_by_name(cfg.probe);
}

}  // namespace detail

inline int run(const RunConfig& cfg, std::ostream& out, std::ostream& err) {
  try {
    Arrangement input = load_arrangement(cfg.input_path);
    Analysis a = analyze_arrangement(input, !cfg.no_normalize);
    BignessWitness big = is_big(a.arrangement);
    if (!a.shear.is_identity() && cfg.command != Command::analyze)
      err << "note: arrangement sheared with " << detail::shear_str(a.shear) << "\n";

    switch (cfg.command) {
      case Command::analyze: {
        if (cfg.format == OutputFormat::json_format)
          out << detail::analysis_to_json(a, big).dump(2) << "\n";
        else
          detail::print_analysis(out, a, big);
        return exit_code::ok;
      }
      case Command::presentation: {
        Presentation p = pipeline_presentation(a, cfg.mode, cfg.style);
        if (cfg.format == OutputFormat::json_format)
          out << presentation_to_json(p).dump(2) << "\n";
        else
          out << presentation_to_text(p);
        return exit_code::ok;
      }
      case Command::structure: {
        const StructureReport& rep = a.classification;
        json doc{{"covered", rep.covered},
                 {"big", big.big},
                 {"classes", classes_to_json(rep.graph, a.points)},
                 {"simple_only_lines", rep.graph.simple_only_lines}};
        if (!rep.covered) {
          doc["free_ranks"] = nullptr;
          doc["abelian_rank"] = nullptr;
          if (cfg.format == OutputFormat::json_format)
            out << doc.dump(2) << "\n";
          else
            out << "NotCovered: class #" << rep.offending_class + 1
                << " of multiple points is not collinear\n";
          return exit_code::not_covered;
        }
        GroupStructure s = structure_from_report(rep, cfg.mode);
        doc["free_ranks"] = s.free_ranks;
        doc["abelian_rank"] = s.abelian_rank;
        doc["mode"] = mode_name(cfg.mode);
        if (cfg.format == OutputFormat::json_format) {
          out << doc.dump(2) << "\n";
        } else {
          out << "mode: " << mode_name(cfg.mode) << "\n";
          out << "free_ranks: [";
          for (size_t i = 0; i < s.free_ranks.size(); ++i)
            out << (i ? "," : "") << s.free_ranks[i];
          out << "]\n";
          out << "abelian_rank: " << s.abelian_rank << "\n";
          out << "structure: " << s.str() << "\n";
          out << "classes: " << rep.graph.classes.size()
              << "  simple-only lines: " << rep.graph.simple_only_lines.size() << "\n";
          out << "big: " << (big.big ? "yes" : "no") << "\n";
        }
        return exit_code::ok;
      }
      case Command::verify: {
        FiniteGroup probe = detail::resolve_probe(cfg);
        std::vector<CheckResult> results = verify_arrangement(a, probe, cfg.budget);
        bool any_fail = false;
        json checks = json::array();
        for (const CheckResult& r : results) {
          any_fail = any_fail || r.failed();
          std::string status = r.status == CheckResult::Status::pass   ? "PASS"
                               : r.status == CheckResult::Status::fail ? "FAIL"
                                                                       : "SKIP";
          if (cfg.format == OutputFormat::json_format) {
            checks.push_back({{"name", r.name},
                              {"status", status},
                              {"detail", r.detail}});
          } else {
            out << status << " " << r.name;
            if (!r.detail.empty()) out << " (" << r.detail << ")";
            out << "\n";
          }
        }
        if (cfg.format == OutputFormat::json_format)
          out << json{{"checks", checks}, {"ok", !any_fail}}.dump(2) << "\n";
        return any_fail ? exit_code::verification_failure : exit_code::ok;
      }
    }
    return exit_code::ok;
  } catch (const NotCoveredError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::not_covered;
  } catch (const ParallelLinesError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::geometry_error;
  } catch (const IdenticalLinesError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::geometry_error;
  } catch (const NotGenericError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::geometry_error;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  } catch (const Error& e) {
    err << "error: " << e.what() << "\n";
    return exit_code::parse_error;
  }
}

}  // namespace arrpi
