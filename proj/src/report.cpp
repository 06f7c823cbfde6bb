#include "ringunits/report.hpp"

#include <sstream>

#include "ringunits/errors.hpp"

namespace ringunits {

namespace {

std::vector<std::pair<int, std::string>> coeff_list(const GAElem& x) {
  std::vector<std::pair<int, std::string>> out;
  for (const auto& [i, c] : x.coeffs) out.emplace_back(i, rat_to_string(c));
  return out;
}

nlohmann::json coeffs_to_json(
    const std::vector<std::pair<int, std::string>>& cs) {
  nlohmann::json arr = nlohmann::json::array();
  for (const auto& [i, s] : cs) arr.push_back({i, s});
  return arr;
}

std::vector<std::pair<int, std::string>> coeffs_from_json(
    const nlohmann::json& j) {
  if (!j.is_array()) throw ParseError("coefficient list must be an array");
  std::vector<std::pair<int, std::string>> out;
  for (const auto& item : j) {
    if (!item.is_array() || item.size() != 2)
      throw ParseError("coefficient entries are [index, \"p/q\"] pairs");
    int idx = item.at(0).get<int>();
    std::string s = item.at(1).get<std::string>();
    rat_from_string(s);  // validate
    out.emplace_back(idx, s);
  }
  return out;
}

std::string division_str(const DivisionDescriptor& d) {
  switch (d.kind) {
    case DivisionKind::RationalField:
      return "Q";
    case DivisionKind::QuadraticField:
      return "Q(sqrt " + std::to_string(d.d) + ")";
    case DivisionKind::QuaternionOverQ:
      return "(" + rat_to_string(d.a) + "," + rat_to_string(d.b) + " / Q)";
    case DivisionKind::QuaternionOverQuadratic: {
      auto lin = [&](const Rational& u, const Rational& v) {
        return rat_to_string(u) + (sgn(v) >= 0 ? "+" : "") +
               rat_to_string(v) + "s";
      };
      return "(" + lin(d.a1, d.a2) + "," + lin(d.b1, d.b2) + " / Q(sqrt " +
             std::to_string(d.d) + "))" +
             (d.totally_definite ? " totally definite" : "");
    }
    case DivisionKind::Split:
      return "split";
    case DivisionKind::Unresolved:
      return "unresolved";
  }
  throw Error("bad division kind");
}

std::string exceptional_str(const WedderburnComponent& c) {
  ExceptionalType exc = classify_exceptional(c);
  if (exc.unresolved) return "unresolved";
  switch (exc.tag) {
    case ExceptionalTag::None: return "none";
    case ExceptionalTag::Type1: return "type1";
    case ExceptionalTag::Type2: return "type2 " + ring_tag_name(exc.ring);
  }
  throw Error("bad exceptional tag");
}

std::string kind_str(UnitKind k) {
  switch (k) {
    case UnitKind::Bass: return "bass";
    case UnitKind::Bicyclic: return "bicyclic";
    case UnitKind::GeneralizedBicyclic: return "generalized-bicyclic";
    case UnitKind::Exceptional: return "exceptional";
  }
  throw Error("bad unit kind");
}

}  // namespace

nlohmann::json ga_to_json(const GAElem& x) {
  return coeffs_to_json(coeff_list(x));
}

GAElem ga_from_json(const GroupPtr& g, const nlohmann::json& j) {
  GAElem x(g);
  for (const auto& [i, s] : coeffs_from_json(j)) {
    if (i < 0 || i >= g->order)
      throw ParseError("element index " + std::to_string(i) +
                       " outside group of order " + std::to_string(g->order));
    x.set(i, rat_from_string(s));
  }
  return x;
}

nlohmann::json gaussian_to_json(const Gaussian& z) {
  return {{"re", z.re.get_str()}, {"im", z.im.get_str()}};
}

Gaussian gaussian_from_json(const nlohmann::json& j) {
  Integer re, im;
  if (re.set_str(j.at("re").get<std::string>(), 10) != 0 ||
      im.set_str(j.at("im").get<std::string>(), 10) != 0)
    throw ParseError("bad gaussian integer");
  return {re, im};
}

nlohmann::json gaussian_matrix_to_json(const GaussianMatrix& m) {
  return {{"a", gaussian_to_json(m.a)},
          {"b", gaussian_to_json(m.b)},
          {"c", gaussian_to_json(m.c)},
          {"d", gaussian_to_json(m.d)}};
}

GaussianMatrix gaussian_matrix_from_json(const nlohmann::json& j) {
  return {gaussian_from_json(j.at("a")), gaussian_from_json(j.at("b")),
          gaussian_from_json(j.at("c")), gaussian_from_json(j.at("d"))};
}

ComponentRecord component_record(int index, const WedderburnComponent& c) {
  ComponentRecord r;
  r.index = index;
  r.dim_q = c.dim_q;
  r.degree_n = c.degree_n;
  r.center_dim = c.center.dim;
  r.center_d = c.center.d;
  r.division = division_str(c.division);
  r.certified = c.division.certified;
  r.exceptional = exceptional_str(c);
  r.faithful = component_faithful(c);
  r.fixed_point_free = c.fixed_point_free;
  r.idempotent = coeff_list(c.e.value);
  return r;
}

GeneratorRecord generator_record(const UnitElement& u) {
  GeneratorRecord r;
  r.kind = kind_str(u.kind);
  r.label = u.label;
  r.denominator = denominator_lcm(u.value).get_str();
  r.value = coeff_list(u.value);
  return r;
}

nlohmann::json report_to_json(const DecompositionReport& r) {
  nlohmann::json comps = nlohmann::json::array();
  for (const ComponentRecord& c : r.components)
    comps.push_back({{"index", c.index},
                     {"dim_q", c.dim_q},
                     {"degree_n", c.degree_n},
                     {"center_dim", c.center_dim},
                     {"center_d", c.center_d},
                     {"division", c.division},
                     {"certified", c.certified},
                     {"exceptional", c.exceptional},
                     {"faithful", c.faithful},
                     {"fixed_point_free", c.fixed_point_free},
                     {"idempotent", coeffs_to_json(c.idempotent)}});
  nlohmann::json gens = nlohmann::json::array();
  for (const GeneratorRecord& g : r.generators)
    gens.push_back({{"kind", g.kind},
                    {"label", g.label},
                    {"denominator", g.denominator},
                    {"value", coeffs_to_json(g.value)}});
  return {{"group", r.group},
          {"order", r.order},
          {"classes", r.classes},
          {"components", comps},
          {"generators", gens},
          {"notes", r.notes}};
}

DecompositionReport report_from_json(const nlohmann::json& j) {
  DecompositionReport r;
  r.group = j.at("group").get<std::string>();
  r.order = j.at("order").get<long>();
  r.classes = j.at("classes").get<int>();
  for (const auto& c : j.at("components")) {
    ComponentRecord rec;
    rec.index = c.at("index").get<int>();
    rec.dim_q = c.at("dim_q").get<int>();
    rec.degree_n = c.at("degree_n").get<int>();
    rec.center_dim = c.at("center_dim").get<int>();
    rec.center_d = c.at("center_d").get<long>();
    rec.division = c.at("division").get<std::string>();
    rec.certified = c.at("certified").get<bool>();
    rec.exceptional = c.at("exceptional").get<std::string>();
    rec.faithful = c.at("faithful").get<bool>();
    rec.fixed_point_free = c.at("fixed_point_free").get<bool>();
    rec.idempotent = coeffs_from_json(c.at("idempotent"));
    r.components.push_back(std::move(rec));
  }
  for (const auto& g : j.at("generators")) {
    GeneratorRecord rec;
    rec.kind = g.at("kind").get<std::string>();
    rec.label = g.at("label").get<std::string>();
    rec.denominator = g.at("denominator").get<std::string>();
    rec.value = coeffs_from_json(g.at("value"));
    r.generators.push_back(std::move(rec));
  }
  for (const auto& n : j.at("notes")) r.notes.push_back(n.get<std::string>());
  return r;
}

std::string report_to_text(const DecompositionReport& r) {
  std::ostringstream out;
  out << "group " << r.group << "  order " << r.order << "  classes "
      << r.classes << "\n";
  for (const ComponentRecord& c : r.components) {
    out << "  [" << c.index << "] dim " << c.dim_q << " = M" << c.degree_n
        << "(" << c.division << ")";
    if (c.center_dim > 1) out << "  center dim " << c.center_dim;
    if (c.center_dim == 2) out << " (d = " << c.center_d << ")";
    out << "  exceptional: " << c.exceptional;
    if (c.faithful) out << "  faithful";
    if (c.fixed_point_free) out << "  fixed-point-free";
    out << "\n";
  }
  if (!r.generators.empty()) {
    out << "  generators: " << r.generators.size() << "\n";
    for (const GeneratorRecord& g : r.generators)
      out << "    " << g.kind << " " << g.label << "  den " << g.denominator
          << "\n";
  }
  for (const std::string& n : r.notes) out << "  note: " << n << "\n";
  return out.str();
}

}  // namespace ringunits
