#include "doctest.h"
#include "ringunits/table2.hpp"
#include "test_helpers.hpp"

using namespace ringunits;
using namespace ringunits::testing;

TEST_CASE("catalog has exactly 55 rows with sane content") {
  const auto& rows = table2();
  CHECK(rows.size() == 55);
  int small = 0;
  for (const auto& row : rows) {
    CHECK(row.order >= 6);
    CHECK(!row.components.empty());
    for (const auto& [mult, tag] : row.components) {
      CHECK(mult >= 1);
      (void)tag;
    }
    if (row.order <= 288) ++small;
  }
  CHECK(small == 49);
}

TEST_CASE("catalog lookups") {
  auto s3row = table2_lookup(6, 1);
  REQUIRE(s3row.has_value());
  CHECK(s3row->structure == "S3");
  CHECK(s3row->components ==
        std::vector<std::pair<int, RingTag>>{{1, RingTag::Q}});

  auto sl25 = table2_lookup(120, 5);
  REQUIRE(sl25.has_value());
  CHECK(sl25->components ==
        std::vector<std::pair<int, RingTag>>{{1, RingTag::H3}});

  auto sl29 = table2_lookup(720, 409);
  REQUIRE(sl29.has_value());
  CHECK(sl29->components ==
        std::vector<std::pair<int, RingTag>>{{2, RingTag::H3}});

  CHECK(!table2_lookup(7, 1).has_value());
  CHECK(!table2_lookup(120, 6).has_value());
}

TEST_CASE("classify_exceptional on computed decompositions") {
  // S3: the 2x2 component over Q is type 2
  for (const auto& c : decompose(s3()))
    if (c.degree_n == 2) {
      auto t = classify_exceptional(c);
      CHECK(t.tag == ExceptionalTag::Type2);
      CHECK(t.ring == RingTag::Q);
    }
  // SmallGroup(16,6): type 2 over Q(i)
  for (const auto& c : decompose(g16_6()))
    if (c.degree_n == 2) {
      auto t = classify_exceptional(c);
      CHECK(t.tag == ExceptionalTag::Type2);
      CHECK(t.ring == RingTag::Qi);
    }
  // Q8: the quaternion component is totally definite, hence not type 1
  for (const auto& c : decompose(q8()))
    if (c.dim_q == 4) {
      auto t = classify_exceptional(c);
      CHECK(t.tag == ExceptionalTag::None);
      CHECK(!t.unresolved);
    }
}

TEST_CASE("classify_exceptional on SL(2,5)") {
  auto dec = decompose(sl25());
  int type2 = 0;
  for (const auto& c : dec) {
    auto t = classify_exceptional(c);
    if (t.tag == ExceptionalTag::Type2) {
      ++type2;
      CHECK(t.ring == RingTag::H3);
      CHECK(c.dim_q == 16);
    } else {
      // in particular the totally definite D1 component is not type 1
      CHECK(t.tag == ExceptionalTag::None);
    }
  }
  CHECK(type2 == 1);
}

TEST_CASE("classify_exceptional synthetic cases") {
  WedderburnComponent c;
  c.degree_n = 1;
  c.center.dim = 1;
  c.division.kind = DivisionKind::QuaternionOverQ;
  c.division.dim = 4;
  c.division.a = -1;
  c.division.b = 3;
  c.division.certified = true;
  auto t = classify_exceptional(c);  // indefinite division algebra
  CHECK(t.tag == ExceptionalTag::Type1);
  CHECK(t.descriptor.b == 3);

  c.division.b = -1;  // totally definite: excluded from type 1
  CHECK(classify_exceptional(c).tag == ExceptionalTag::None);

  c.degree_n = 2;  // M2(H1) is type 2
  auto t2 = classify_exceptional(c);
  CHECK(t2.tag == ExceptionalTag::Type2);
  CHECK(t2.ring == RingTag::H1);

  c.division.b = -7;  // ramified at {inf, 7}: falsifies the classification
  CHECK_THROWS_AS(classify_exceptional(c), TheoremViolation);

  WedderburnComponent f;
  f.degree_n = 2;
  f.center.dim = 2;
  f.center.d = -5;
  f.division.kind = DivisionKind::QuadraticField;
  f.division.dim = 2;
  f.division.d = -5;
  f.division.certified = true;
  CHECK_THROWS_AS(classify_exceptional(f), TheoremViolation);
  f.division.d = 2;  // real quadratic: allowed, simply not exceptional
  f.center.d = 2;
  CHECK(classify_exceptional(f).tag == ExceptionalTag::None);

  WedderburnComponent u;
  u.degree_n = 2;
  u.division.certified = false;
  auto tu = classify_exceptional(u);
  CHECK(tu.tag == ExceptionalTag::None);
  CHECK(tu.unresolved);
}
