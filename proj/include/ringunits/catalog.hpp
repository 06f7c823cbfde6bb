#pragma once

#include <string>
#include <vector>

#include "ringunits/fingroup.hpp"

namespace ringunits {

/// One bundled permutation group.  `name` is the CLI handle ("16_6",
/// "sl25", ...); `id_order`/`id_index` give the library identification
/// when the group is a catalog row.
struct CatalogEntry {
  std::string name;
  long id_order = 0, id_index = 0;
  int degree = 0;
  std::vector<std::vector<int>> generators;  // 1-indexed image lists
  long expected_order = 0;
  int expected_classes = 0;
};

/// The bundled groups (groups.json next to table2.json).
const std::vector<CatalogEntry>& catalog();

/// Entry by name; throws UnknownCatalogName.
const CatalogEntry& catalog_entry(const std::string& name);

/// Build the group of a catalog entry and refuse it when the closure does
/// not reproduce expected_order / expected_classes.
GroupPtr catalog_group(const CatalogEntry& entry);
GroupPtr catalog_group(const std::string& name);

/// Parsed group request: either a catalog name or explicit generators.
struct GroupInputSpec {
  std::string catalog_name;  // empty for explicit input
  int degree = 0;
  std::vector<std::vector<int>> generators;

  GroupPtr build() const;
};

/// UTF-8 JSON, either {"catalog": "16_6"} or
/// {"degree": n, "generators": [[...], ...]}.  Throws ParseError /
/// UnknownCatalogName.
GroupInputSpec parse_group_input(const std::string& text);

/// CLI group argument: "catalog:NAME", a path to a JSON spec file, or "-"
/// for standard input.
GroupInputSpec resolve_group_argument(const std::string& arg);

}  // namespace ringunits
