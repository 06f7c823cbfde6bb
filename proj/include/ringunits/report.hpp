#pragma once

#include <string>
#include <utility>
#include <vector>

#include "json.hpp"
#include "ringunits/commensurable.hpp"
#include "ringunits/schreier.hpp"
#include "ringunits/table2.hpp"
#include "ringunits/wedderburn.hpp"

namespace ringunits {

/// Group algebra elements as arrays of [element_index, "p/q"].
nlohmann::json ga_to_json(const GAElem& x);
GAElem ga_from_json(const GroupPtr& g, const nlohmann::json& j);

/// Gaussian integers as {"re": int-string, "im": int-string}.
nlohmann::json gaussian_to_json(const Gaussian& z);
Gaussian gaussian_from_json(const nlohmann::json& j);
nlohmann::json gaussian_matrix_to_json(const GaussianMatrix& m);
GaussianMatrix gaussian_matrix_from_json(const nlohmann::json& j);

/// Flat serializable view of one Wedderburn component.
struct ComponentRecord {
  int index = 0;
  int dim_q = 0, degree_n = 0;
  int center_dim = 1;
  long center_d = 0;
  std::string division;       // "Q", "Q(sqrt -1)", "(-1,-3 / Q)", ...
  bool certified = false;
  std::string exceptional;    // "none" | "type1" | "type2 RING" | "unresolved"
  bool faithful = false;
  bool fixed_point_free = false;
  std::vector<std::pair<int, std::string>> idempotent;
};

struct GeneratorRecord {
  std::string kind;   // bass | bicyclic | generalized-bicyclic | exceptional
  std::string label;
  std::string denominator;  // lcm of coefficient denominators of the unit
  std::vector<std::pair<int, std::string>> value;
};

struct DecompositionReport {
  std::string group;  // catalog name or "input"
  long order = 0;
  int classes = 0;
  std::vector<ComponentRecord> components;
  std::vector<GeneratorRecord> generators;
  std::vector<std::string> notes;
};

ComponentRecord component_record(int index, const WedderburnComponent& c);
GeneratorRecord generator_record(const UnitElement& u);

nlohmann::json report_to_json(const DecompositionReport& r);
DecompositionReport report_from_json(const nlohmann::json& j);

std::string report_to_text(const DecompositionReport& r);

}  // namespace ringunits
