#include "report.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <ostream>

namespace eah::cli {

namespace {

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n\r") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

std::string margin_or_empty(const Certificate& c, Theorem t) {
  const BoundCheck* check = c.find(t);
  return check ? fmt(check->margin) : "";
}

}  // namespace

std::string fmt(double v) {
  if (!std::isfinite(v)) return "nan";
  char buf[64];
  std::snprintf(buf, sizeof buf, "%.15g", v);
  return buf;
}

Json real(double v) {
  if (!std::isfinite(v)) return nullptr;
  return std::strtod(fmt(v).c_str(), nullptr);
}

Json to_json(const Point& p) {
  if (p.is_infinity()) return Json{{"infinity", true}};
  return Json{{"x", to_string(p.x())}, {"y", to_string(p.y())}};
}

Json to_json(const ReductionData& r) {
  return Json{{"prime", to_string(r.prime)},
              {"kodaira", r.kodaira.symbol()},
              {"tamagawa", r.tamagawa},
              {"ord_delta", r.ord_delta},
              {"tate_trace", r.tate_trace}};
}

Json to_json(const HeightBreakdown& h) {
  Json j;
  j["torsion"] = h.torsion;
  j["naive"] = real(h.naive);
  j["canonical"] = real(h.canonical);
  j["difference"] = real(h.difference);
  j["error_bound"] = real(h.error_bound);
  j["minimal_a"] = to_string(h.minimal_a);
  j["scale"] = to_string(h.scale);
  if (!h.torsion) {
    j["archimedean"] = Json{{"value", real(h.archimedean.value)},
                            {"tail_bound", real(h.archimedean.tail_bound)},
                            {"terms_used", h.archimedean.terms_used},
                            {"rounding_bound", real(h.archimedean.rounding_bound)}};
    Json terms = Json::array();
    for (const auto& t : h.nonarch_terms) {
      terms.push_back(Json{{"prime", to_string(t.prime)},
                           {"coefficient", to_string(t.coefficient)},
                           {"value", real(t.value())},
                           {"correction", std::string(to_string(t.correction_tag))}});
    }
    j["nonarchimedean"] = std::move(terms);
  }
  return j;
}

Json to_json(const BoundCheck& c) {
  return Json{{"theorem", std::string(to_string(c.theorem))},
              {"bound", real(c.bound)},
              {"actual", real(c.actual)},
              {"margin", real(c.margin)},
              {"error_bound", real(c.error_bound)},
              {"verdict", std::string(to_string(c.verdict))}};
}

Json to_json(const Certificate& c) {
  Json checks = Json::array();
  for (const auto& check : c.checks) checks.push_back(to_json(check));
  Json j{{"verdict", std::string(to_string(c.overall()))},
         {"extended_rerun", c.extended_rerun},
         {"checks", std::move(checks)}};
  if (!c.notes.empty()) j["notes"] = c.notes;
  return j;
}

Json to_json(const ExtremalCandidate& c) {
  Json j{{"family", c.family}, {"parameter", to_string(c.parameter)}};
  if (c.index) j["index"] = *c.index;
  j["a"] = to_string(c.curve.a());
  j["point"] = to_json(c.point);
  if (c.target_x2p) j["target_x2p"] = to_string(*c.target_x2p);
  j["validated"] = c.validated;
  j["minimal"] = c.minimal;
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json summary_json(const SweepReport& r) {
  Json classes = Json::object();
  for (const auto& [tag, cls] : r.classes) {
    Json margins = Json::object();
    for (const auto& [theorem, m] : cls.min_margin) margins[std::string(to_string(theorem))] = real(m);
    Json entry{{"curves", cls.curves},
               {"points", cls.points},
               {"nontorsion", cls.nontorsion},
               {"min_margin", std::move(margins)}};
    if (cls.lang_argmin) {
      entry["lang_argmin"] = Json{{"a", to_string(cls.lang_argmin->first)}, {"x", to_string(cls.lang_argmin->second)}};
    }
    classes[tag] = std::move(entry);
  }
  return Json{{"curves", r.curves.size()},
              {"rows", r.rows.size()},
              {"failures", r.failures},
              {"inconclusive", r.inconclusive},
              {"sum_formula_mismatches", r.sum_formula_mismatches},
              {"b2_violations", r.b2_violations},
              {"square_violations", r.square_violations},
              {"hypothesis_mismatches", r.hypothesis_mismatches},
              {"classes", std::move(classes)},
              {"log", r.log}};
}

Json sweep_json(const SweepReport& r) {
  Json rows = Json::array();
  for (const SweepRow& row : r.rows) {
    Json j{{"a", to_string(row.a)}, {"point", to_json(row.point)}, {"class", class_tag(row.a)}};
    j["height"] = to_json(row.certificate.height);
    j["certificate"] = to_json(row.certificate);
    if (row.sum_formula) j["sum_formula_exact"] = row.sum_formula->exact();
    if (!row.torsion()) j["x2p_square"] = row.x2p_square;
    rows.push_back(std::move(j));
  }
  return Json{{"rows", std::move(rows)}, {"summary", summary_json(r)}};
}

const char* csv_header() {
  return "a,x,y,torsion,class,naive,canonical,difference,error_bound,lang_margin,corollary_margin,"
         "diff_upper_margin,diff_lower_sqrt_margin,diff_lower_const_margin,b2_margin,sum_formula_exact,"
         "x2p_square,verdict";
}

void write_csv(std::ostream& os, const SweepReport& r) {
  os << csv_header() << "\n";
  for (const SweepRow& row : r.rows) {
    const Certificate& c = row.certificate;
    const HeightBreakdown& h = c.height;
    os << to_string(row.a) << ',' << to_string(row.point.x()) << ',' << to_string(row.point.y()) << ','
       << (row.torsion() ? "1" : "0") << ',' << csv_field(class_tag(row.a)) << ',' << fmt(h.naive) << ','
       << fmt(h.canonical) << ',' << fmt(h.difference) << ',' << fmt(h.error_bound) << ','
       << margin_or_empty(c, Theorem::Lang) << ',' << margin_or_empty(c, Theorem::Corollary) << ','
       << margin_or_empty(c, Theorem::DiffUpper) << ',' << margin_or_empty(c, Theorem::DiffLowerSqrt) << ','
       << margin_or_empty(c, Theorem::DiffLowerConst) << ',' << margin_or_empty(c, Theorem::B2) << ','
       << (row.sum_formula ? (row.sum_formula->exact() ? "1" : "0") : "") << ','
       << (row.torsion() ? "" : (row.x2p_square ? "1" : "0")) << ',' << to_string(c.overall()) << "\n";
  }
}

void write_summary_text(std::ostream& os, const SweepReport& r) {
  std::size_t nontorsion = 0;
  for (const auto& row : r.rows) nontorsion += row.torsion() ? 0 : 1;
  os << "curves: " << r.curves.size() << ", points: " << r.rows.size() << " (" << nontorsion << " nontorsion)\n";
  os << "failures: " << r.failures << ", inconclusive: " << r.inconclusive
     << ", sum-formula mismatches: " << r.sum_formula_mismatches << ", B2 violations: " << r.b2_violations
     << ", non-square x(2P): " << r.square_violations << ", hypothesis mismatches: " << r.hypothesis_mismatches
     << "\n";
  for (const auto& [tag, cls] : r.classes) {
    os << "[" << tag << "] curves " << cls.curves << ", nontorsion points " << cls.nontorsion;
    for (const auto& [theorem, m] : cls.min_margin) os << ", min " << to_string(theorem) << " " << fmt(m);
    if (cls.lang_argmin) {
      os << " (Lang min at a=" << to_string(cls.lang_argmin->first) << ", x=" << to_string(cls.lang_argmin->second)
         << ")";
    }
    os << "\n";
  }
  for (const auto& line : r.log) os << "log: " << line << "\n";
}

}  // namespace eah::cli
