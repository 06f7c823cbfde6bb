#include "ringunits/schreier.hpp"

#include "ringunits/errors.hpp"

namespace ringunits {

std::string Gaussian::str() const {
  if (im == 0) return re.get_str();
  std::string s = re == 0 ? "" : re.get_str();
  if (im > 0 && re != 0) s += "+";
  if (im == -1)
    s += "-";
  else if (im != 1)
    s += im.get_str();
  return s + "i";
}

GaussianMatrix gaussian_identity() {
  return {{1, 0}, {0, 0}, {0, 0}, {1, 0}};
}

CongruenceCondition condition_c() { return {2, 4, 4}; }
CongruenceCondition condition_gamma() { return {2, 4, 2}; }
CongruenceCondition condition_level(long m) { return {m, m, m}; }

bool in_subgroup(const GaussianMatrix& m, const CongruenceCondition& c) {
  if (!(m.det() == Gaussian(1, 0)))
    throw NotUnimodular("congruence membership requires det = 1");
  Gaussian one(1, 0);
  if (c.diag && !((m.a - one).divisible_by(c.diag) &&
                  (m.d - one).divisible_by(c.diag)))
    return false;
  if (c.ur && !m.b.divisible_by(c.ur)) return false;
  if (c.ll && !m.c.divisible_by(c.ll)) return false;
  return true;
}

std::vector<GaussianMatrix> coset_enumerate(
    const std::vector<GaussianMatrix>& generators,
    const CongruenceCondition& c, int bound) {
  std::vector<GaussianMatrix> reps{gaussian_identity()};
  auto find_rep = [&](const GaussianMatrix& m) {
    for (size_t i = 0; i < reps.size(); ++i)
      if (in_subgroup(m * reps[i].inverse(), c)) return (int)i;
    return -1;
  };
  for (size_t head = 0; head < reps.size(); ++head) {
    GaussianMatrix t = reps[head];  // copy: reps may reallocate
    for (const GaussianMatrix& x : generators) {
      GaussianMatrix m = t * x;
      if (find_rep(m) >= 0) continue;
      if ((int)reps.size() >= bound)
        throw BoundExceeded("coset enumeration exceeded bound " +
                            std::to_string(bound));
      reps.push_back(m);
    }
  }
  return reps;
}

std::vector<GaussianMatrix> schreier_generators(
    const std::vector<GaussianMatrix>& x,
    const std::vector<GaussianMatrix>& t, const CongruenceCondition& c,
    bool dedupe) {
  for (size_t i = 0; i < t.size(); ++i)
    for (size_t j = 0; j < t.size(); ++j)
      if (i != j && in_subgroup(t[i] * t[j].inverse(), c))
        throw InvalidTransversal("transversal entries share a coset");
  auto rep_of = [&](const GaussianMatrix& m) -> const GaussianMatrix& {
    for (const GaussianMatrix& s : t)
      if (in_subgroup(m * s.inverse(), c)) return s;
    throw InvalidTransversal("a generator translate leaves the transversal");
  };
  std::vector<GaussianMatrix> out;
  for (const GaussianMatrix& ti : t)
    for (const GaussianMatrix& xi : x) {
      GaussianMatrix m = ti * xi;
      GaussianMatrix g = m * rep_of(m).inverse();
      if (!in_subgroup(g, c))
        throw InvalidTransversal("Schreier element fails the condition");
      if (dedupe) {
        if (g == gaussian_identity()) continue;
        bool seen = false;
        for (const GaussianMatrix& h : out)
          if (h == g) {
            seen = true;
            break;
          }
        if (seen) continue;
      }
      out.push_back(g);
    }
  return out;
}

std::vector<JespersLealEntry> jespers_leal_dataset() {
  struct Raw {
    const char* label;
    long are, aim, bre, bim, cre, cim, dre, dim;
  };
  // verbatim from the published list; l5's top-left is printed "29+2"
  static const Raw raws[] = {
      {"l1", 5, -2, 4, 4, 2, 0, 1, 2},
      {"l2", 5, 0, 0, 4, 0, 4, -3, 0},
      {"l3", -3, -6, 0, -4, 0, -4, 1, -2},
      {"l4", 3, -2, 4, 0, 0, 2, -1, 2},
      {"l5", 31, 0, 0, 44, -8, 20, -31, -10},
      {"l6", 17, -12, 20, 24, 8, 0, 1, 12},
      {"l7", 11, 38, -56, 20, 0, 22, -33, 2},
      {"l8", 27, -2, -32, 16, 0, 18, -9, -22},
      {"l9", -7, -14, 20, -12, 10, -8, 13, 14},
      {"r1", 1, 0, 4, 0, 0, 0, 1, 0},
      {"r2", 3, 0, 0, -4, 0, 2, 3, 0},
      {"r3", 1, 0, 0, 0, 2, 0, 1, 0},
      {"r4", -7, -6, -4, -8, 4, -4, 5, -2},
      {"r5", 29, 44, -64, 48, -30, 16, -27, -44},
      {"r6", -5, -8, 12, -8, 0, -2, 3, 0},
      {"r7", 13, 6, -8, 20, 12, 0, 1, 18},
      {"r8", -7, -18, 16, 16, 12, -4, -11, 10},
  };
  std::vector<JespersLealEntry> out;
  for (const Raw& r : raws) {
    JespersLealEntry e;
    e.label = r.label;
    e.printed = {{r.are, r.aim}, {r.bre, r.bim},
                 {r.cre, r.cim}, {r.dre, r.dim}};
    e.det_ok = e.printed.det() == Gaussian(1, 0);
    if (e.det_ok) {
      e.pattern_ok = in_subgroup(e.printed, condition_gamma());
    } else if (e.label == "l5") {
      // "29+2" read as 31 breaks det = 1; 29+2i restores it
      GaussianMatrix fix = e.printed;
      fix.a = {29, 2};
      if (fix.det() == Gaussian(1, 0)) {
        e.corrected = fix;
        e.pattern_ok = in_subgroup(fix, condition_gamma());
        e.note = "top-left printed as 29+2; corrected to 29+2i";
      }
    }
    out.push_back(std::move(e));
  }
  if (out.size() != 17) throw Error("Jespers-Leal dataset must have 17 rows");
  return out;
}

std::vector<GaussianMatrix> jespers_leal_matrices() {
  std::vector<GaussianMatrix> out;
  for (const JespersLealEntry& e : jespers_leal_dataset())
    out.push_back(e.corrected ? *e.corrected : e.printed);
  return out;
}

}  // namespace ringunits
