#include "ringunits/table2.hpp"

#include <cstdlib>
#include <fstream>

#include "json.hpp"
#include "ringunits/errors.hpp"

namespace ringunits {

namespace {

std::string data_dir() {
  if (const char* env = std::getenv("RINGUNITS_DATA")) return env;
  return RINGUNITS_DATA_DIR;
}

std::vector<Table2Row> load_table2() {
  std::string path = data_dir() + "/table2.json";
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<Table2Row> rows;
  for (const auto& item : j) {
    Table2Row row;
    row.order = item.at("id").at(0).get<long>();
    row.index = item.at("id").at(1).get<long>();
    row.structure = item.at("structure").get<std::string>();
    for (const auto& comp : item.at("components"))
      row.components.emplace_back(
          comp.at(0).get<int>(),
          ring_tag_from_string(comp.at(1).get<std::string>()));
    if (row.components.empty()) throw Error("catalog row without components");
    rows.push_back(std::move(row));
  }
  if (rows.size() != 55)
    throw Error("catalog must have exactly 55 rows, found " +
                std::to_string(rows.size()));
  return rows;
}

}  // namespace

const std::vector<Table2Row>& table2() {
  static const std::vector<Table2Row> rows = load_table2();
  return rows;
}

std::optional<Table2Row> table2_lookup(long order, long index) {
  for (const Table2Row& row : table2())
    if (row.order == order && row.index == index) return row;
  return std::nullopt;
}

namespace {

bool definite_over_q(const DivisionDescriptor& d) {
  return d.a < 0 && d.b < 0;
}

RingTag quaternion_tag(const DivisionDescriptor& d) {
  RamificationSet ram = ramification_set({d.a, d.b});
  if (!ram.infinite || ram.finite_places.size() != 1)
    throw TheoremViolation(
        "totally definite 2x2 quaternion component outside H1/H3/H5");
  switch (ram.finite_places[0]) {
    case 2: return RingTag::H1;
    case 3: return RingTag::H3;
    case 5: return RingTag::H5;
  }
  throw TheoremViolation(
      "totally definite 2x2 quaternion component outside H1/H3/H5");
}

}  // namespace

ExceptionalType classify_exceptional(const WedderburnComponent& c) {
  ExceptionalType out;
  const DivisionDescriptor& d = c.division;
  bool commutative = d.dim == c.center.dim;
  if (!d.certified) {
    out.unresolved = true;
    return out;
  }
  if (c.degree_n == 2) {
    switch (d.kind) {
      case DivisionKind::RationalField:
        out.tag = ExceptionalTag::Type2;
        out.ring = RingTag::Q;
        return out;
      case DivisionKind::QuadraticField:
        if (d.d > 0) return out;  // real quadratic: not exceptional
        if (d.d == -1) out.ring = RingTag::Qi;
        else if (d.d == -2) out.ring = RingTag::Qsqrtm2;
        else if (d.d == -3) out.ring = RingTag::Qsqrtm3;
        else
          throw TheoremViolation(
              "2x2 component over imaginary quadratic field with d = " +
              std::to_string(d.d));
        out.tag = ExceptionalTag::Type2;
        return out;
      case DivisionKind::QuaternionOverQ:
        if (!definite_over_q(d)) return out;  // indefinite: not exceptional
        out.tag = ExceptionalTag::Type2;
        out.ring = quaternion_tag(d);
        return out;
      default:
        return out;  // larger centers / quaternions over fields: not type 2
    }
  }
  if (c.degree_n == 1 && !commutative && !d.totally_definite &&
      !(d.kind == DivisionKind::QuaternionOverQ && definite_over_q(d))) {
    out.tag = ExceptionalTag::Type1;
    out.descriptor = d;
  }
  return out;
}

}  // namespace ringunits
