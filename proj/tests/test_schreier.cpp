#include <random>

#include "doctest.h"
#include "ringunits/schreier.hpp"
#include "ringunits/errors.hpp"

using namespace ringunits;

namespace {

GaussianMatrix mat(long are, long aim, long bre, long bim, long cre, long cim,
                   long dre, long dim) {
  return {{are, aim}, {bre, bim}, {cre, cim}, {dre, dim}};
}

}  // namespace

TEST_CASE("gaussian matrix determinant is multiplicative") {
  std::mt19937_64 rng(23);
  std::uniform_int_distribution<long> coeff(-9, 9);
  for (int it = 0; it < 1000; ++it) {
    GaussianMatrix x = mat(coeff(rng), coeff(rng), coeff(rng), coeff(rng),
                           coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    GaussianMatrix y = mat(coeff(rng), coeff(rng), coeff(rng), coeff(rng),
                           coeff(rng), coeff(rng), coeff(rng), coeff(rng));
    CHECK((x * y).det() == x.det() * y.det());
  }
}

TEST_CASE("congruence membership") {
  CHECK(in_subgroup(gaussian_identity(), condition_c()));
  GaussianMatrix r1 = mat(1, 0, 4, 0, 0, 0, 1, 0);
  CHECK(in_subgroup(r1, condition_c()));
  GaussianMatrix r3 = mat(1, 0, 0, 0, 2, 0, 1, 0);
  CHECK(!in_subgroup(r3, condition_c()));  // lower-left 2 not in 4Z[i]
  CHECK(in_subgroup(r3, condition_gamma()));
  GaussianMatrix bad = mat(2, 0, 0, 0, 0, 0, 1, 0);  // det 2
  CHECK_THROWS_AS(in_subgroup(bad, condition_c()), NotUnimodular);
}

TEST_CASE("jespers-leal dataset validates") {
  auto ds = jespers_leal_dataset();
  REQUIRE(ds.size() == 17);
  int det_ok = 0;
  for (const auto& e : ds) {
    if (e.det_ok) ++det_ok;
    CHECK(e.pattern_ok);  // printed or corrected entry fits Gamma
    if (e.corrected) CHECK(e.corrected->det() == Gaussian(1, 0));
  }
  CHECK(det_ok == 16);
  auto l5 = ds[4];
  CHECK(l5.label == "l5");
  CHECK(!l5.det_ok);
  REQUIRE(l5.corrected.has_value());
  CHECK(l5.corrected->a == Gaussian(29, 2));
  // spot determinants quoted entries
  CHECK(ds[0].printed.det() == Gaussian(1, 0));   // l1
  CHECK(ds[10].printed.det() == Gaussian(1, 0));  // r2
  for (const auto& m : jespers_leal_matrices())
    CHECK(m.det() == Gaussian(1, 0));
}

TEST_CASE("coset enumeration: trivial and level-2 cases") {
  auto gens = jespers_leal_matrices();
  // ambient condition itself: single coset
  CHECK(coset_enumerate(gens, condition_gamma(), 10).size() == 1);

  // SL2(Z) with S, T modulo the principal level-2 subgroup: index 6
  std::vector<GaussianMatrix> st = {mat(0, 0, -1, 0, 1, 0, 0, 0),
                                    mat(1, 0, 1, 0, 0, 0, 1, 0)};
  CHECK(coset_enumerate(st, condition_level(2), 10).size() == 6);
  CHECK_THROWS_AS(coset_enumerate(st, condition_level(2), 3), BoundExceeded);
}

TEST_CASE("jespers-leal cosets of C have index 4 with the paper transversal") {
  auto gens = jespers_leal_matrices();
  auto t = coset_enumerate(gens, condition_c(), 16);
  REQUIRE(t.size() == 4);
  CHECK(t[0] == gaussian_identity());
  GaussianMatrix r2 = mat(3, 0, 0, -4, 0, 2, 3, 0);
  GaussianMatrix r3 = mat(1, 0, 0, 0, 2, 0, 1, 0);
  std::vector<GaussianMatrix> paper = {gaussian_identity(), r2, r3, r2 * r3};
  // same coset decomposition: bijection via membership of m * rep^-1
  for (const auto& p : paper) {
    int hits = 0;
    for (const auto& rep : t)
      if (in_subgroup(p * rep.inverse(), condition_c())) ++hits;
    CHECK(hits == 1);
  }
}

TEST_CASE("schreier generators") {
  auto gens = jespers_leal_matrices();
  // T = {I} with the ambient condition returns X itself
  auto self = schreier_generators(gens, {gaussian_identity()},
                                  condition_gamma());
  REQUIRE(self.size() == gens.size());
  for (size_t i = 0; i < gens.size(); ++i) CHECK(self[i] == gens[i]);

  auto t = coset_enumerate(gens, condition_c(), 16);
  auto raw = schreier_generators(gens, t, condition_c());
  CHECK(raw.size() == 68);
  for (const auto& g : raw) CHECK(in_subgroup(g, condition_c()));
  auto slim = schreier_generators(gens, t, condition_c(), true);
  CHECK(slim.size() <= 68);
  CHECK(slim.size() >= 60);

  std::vector<GaussianMatrix> badt = {gaussian_identity(),
                                      gaussian_identity()};
  CHECK_THROWS_AS(schreier_generators(gens, badt, condition_c()),
                  InvalidTransversal);
}

TEST_CASE("schreier generators for the SL2(Z) level-2 case") {
  std::vector<GaussianMatrix> st = {mat(0, 0, -1, 0, 1, 0, 0, 0),
                                    mat(1, 0, 1, 0, 0, 0, 1, 0)};
  auto t = coset_enumerate(st, condition_level(2), 10);
  auto out = schreier_generators(st, t, condition_level(2));
  CHECK(out.size() == t.size() * st.size());
  for (const auto& g : out) CHECK(in_subgroup(g, condition_level(2)));
}
