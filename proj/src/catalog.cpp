#include "ringunits/catalog.hpp"

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>

#include "json.hpp"
#include "ringunits/errors.hpp"

namespace ringunits {

namespace {

std::string data_dir() {
  if (const char* env = std::getenv("RINGUNITS_DATA")) return env;
  return RINGUNITS_DATA_DIR;
}

std::vector<CatalogEntry> load_catalog() {
  std::string path = data_dir() + "/groups.json";
  std::ifstream in(path);
  if (!in) throw Error("cannot open catalog file " + path);
  nlohmann::json j = nlohmann::json::parse(in);
  std::vector<CatalogEntry> out;
  for (const auto& item : j) {
    CatalogEntry e;
    e.name = item.at("name").get<std::string>();
    e.id_order = item.at("id").at(0).get<long>();
    e.id_index = item.at("id").at(1).get<long>();
    e.degree = item.at("degree").get<int>();
    for (const auto& p : item.at("generators"))
      e.generators.push_back(p.get<std::vector<int>>());
    e.expected_order = item.at("expected_order").get<long>();
    e.expected_classes = item.at("expected_classes").get<int>();
    for (const CatalogEntry& prev : out)
      if (prev.name == e.name)
        throw Error("duplicate catalog name " + e.name);
    out.push_back(std::move(e));
  }
  if (out.empty()) throw Error("empty group catalog " + path);
  return out;
}

}  // namespace

const std::vector<CatalogEntry>& catalog() {
  static const std::vector<CatalogEntry> entries = load_catalog();
  return entries;
}

const CatalogEntry& catalog_entry(const std::string& name) {
  for (const CatalogEntry& e : catalog())
    if (e.name == name) return e;
  throw UnknownCatalogName("no catalog group named " + name);
}

GroupPtr catalog_group(const CatalogEntry& entry) {
  GroupPtr g = from_generators(entry.degree, entry.generators);
  if (g->order != entry.expected_order)
    throw Error("catalog entry " + entry.name + ": closure has order " +
                std::to_string(g->order) + ", expected " +
                std::to_string(entry.expected_order));
  if (g->num_classes() != entry.expected_classes)
    throw Error("catalog entry " + entry.name + ": found " +
                std::to_string(g->num_classes()) + " classes, expected " +
                std::to_string(entry.expected_classes));
  return g;
}

GroupPtr catalog_group(const std::string& name) {
  return catalog_group(catalog_entry(name));
}

GroupPtr GroupInputSpec::build() const {
  if (!catalog_name.empty()) return catalog_group(catalog_name);
  return from_generators(degree, generators);
}

GroupInputSpec parse_group_input(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& ex) {
    throw ParseError(std::string("group input is not valid JSON: ") +
                     ex.what());
  }
  GroupInputSpec spec;
  if (j.contains("catalog")) {
    if (!j.at("catalog").is_string())
      throw ParseError("field 'catalog' must be a string");
    spec.catalog_name = j.at("catalog").get<std::string>();
    catalog_entry(spec.catalog_name);  // throws UnknownCatalogName
    return spec;
  }
  if (!j.contains("degree") || !j.contains("generators"))
    throw ParseError(
        "group input needs either 'catalog' or 'degree' + 'generators'");
  if (!j.at("degree").is_number_integer())
    throw ParseError("field 'degree' must be an integer");
  spec.degree = j.at("degree").get<int>();
  if (spec.degree <= 0) throw ParseError("field 'degree' must be positive");
  if (!j.at("generators").is_array() || j.at("generators").empty())
    throw ParseError("field 'generators' must be a nonempty array");
  for (const auto& p : j.at("generators")) {
    if (!p.is_array())
      throw ParseError("each generator must be an image list");
    std::vector<int> images;
    for (const auto& v : p) {
      if (!v.is_number_integer())
        throw ParseError("generator images must be integers");
      images.push_back(v.get<int>());
    }
    spec.generators.push_back(std::move(images));
  }
  // validate eagerly so malformed permutations surface at parse time
  from_generators(spec.degree, spec.generators);
  return spec;
}

GroupInputSpec resolve_group_argument(const std::string& arg) {
  if (arg.rfind("catalog:", 0) == 0) {
    GroupInputSpec spec;
    spec.catalog_name = arg.substr(8);
    catalog_entry(spec.catalog_name);
    return spec;
  }
  if (arg == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return parse_group_input(buf.str());
  }
  std::ifstream in(arg);
  if (!in) throw ParseError("cannot open group file " + arg);
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_group_input(buf.str());
}

}  // namespace ringunits
