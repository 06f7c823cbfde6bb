#include "doctest.h"
#include "ringunits/catalog.hpp"
#include "ringunits/report.hpp"
#include "test_helpers.hpp"

using namespace ringunits;

TEST_CASE("parse_group_input accepts explicit generators") {
  GroupInputSpec spec =
      parse_group_input(R"({"degree": 3, "generators": [[2,3,1],[2,1,3]]})");
  CHECK(spec.catalog_name.empty());
  CHECK(spec.degree == 3);
  GroupPtr g = spec.build();
  CHECK(g->order == 6);
  CHECK(g->num_classes() == 3);
}

TEST_CASE("parse_group_input accepts catalog references") {
  GroupInputSpec spec = parse_group_input(R"({"catalog": "16_6"})");
  CHECK(spec.catalog_name == "16_6");
  GroupPtr g = spec.build();
  CHECK(g->order == 16);
}

TEST_CASE("parse_group_input rejects bad input") {
  CHECK_THROWS_AS(parse_group_input("not json"), ParseError);
  CHECK_THROWS_AS(parse_group_input("{}"), ParseError);
  CHECK_THROWS_AS(parse_group_input(R"({"degree": 2})"), ParseError);
  CHECK_THROWS_AS(parse_group_input(R"({"degree": 2, "generators": [[1,1]]})"),
                  InvalidPermutation);
  CHECK_THROWS_AS(parse_group_input(R"({"degree": 2, "generators": [[1,3]]})"),
                  InvalidPermutation);
  CHECK_THROWS_AS(parse_group_input(R"({"catalog": "no_such_group"})"),
                  UnknownCatalogName);
}

TEST_CASE("catalog entries rebuild with the advertised order and classes") {
  CHECK(catalog().size() >= 35);
  for (const char* name : {"s3", "16_6", "sl23", "sl25"}) {
    const CatalogEntry& e = catalog_entry(name);
    GroupPtr g = catalog_group(e);
    CHECK(g->order == e.expected_order);
    CHECK(g->num_classes() == e.expected_classes);
  }
  CHECK(catalog_entry("sl25").id_order == 120);
  CHECK(catalog_entry("sl25").id_index == 5);
}

TEST_CASE("group algebra element JSON round trip") {
  GroupPtr g = testing::s3();
  GAElem x(g);
  x.set(0, rat(1, 2));
  x.set(3, rat(-7, 3));
  GAElem y = ga_from_json(g, ga_to_json(x));
  CHECK(x == y);
  CHECK_THROWS_AS(ga_from_json(g, nlohmann::json{{7, "1/2"}}), ParseError);
}

TEST_CASE("gaussian matrix JSON round trip") {
  GaussianMatrix m{{Integer(3), Integer(-2)},
                   {Integer(0), Integer(11)},
                   {Integer(-5), Integer(1)},
                   {Integer(29), Integer(2)}};
  GaussianMatrix back = gaussian_matrix_from_json(gaussian_matrix_to_json(m));
  CHECK(back.a == m.a);
  CHECK(back.b == m.b);
  CHECK(back.c == m.c);
  CHECK(back.d == m.d);
}

TEST_CASE("decomposition report serializes bit-exactly") {
  GroupInputSpec spec = parse_group_input(R"({"catalog": "16_6"})");
  GroupPtr g = spec.build();
  DecompositionReport r;
  r.group = "16_6";
  r.order = g->order;
  r.classes = g->num_classes();
  auto dec = decompose(g, 0);
  for (int i = 0; i < (int)dec.size(); ++i)
    r.components.push_back(component_record(i, dec[i]));
  r.notes.push_back("round trip");

  nlohmann::json j1 = report_to_json(r);
  DecompositionReport r2 = report_from_json(j1);
  nlohmann::json j2 = report_to_json(r2);
  CHECK(j1.dump() == j2.dump());
  CHECK(r2.components.size() == r.components.size());
}
