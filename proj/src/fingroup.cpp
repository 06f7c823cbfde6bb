#include "ringunits/fingroup.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace ringunits {

namespace {

std::vector<int> compose(const std::vector<int>& p, const std::vector<int>& q) {
  // (p*q)(x) = p(q(x)): apply q first.  Matches left-to-right products of
  // group elements acting on the right being irrelevant here; only
  // consistency matters, and all tables are built with this convention.
  std::vector<int> r(p.size());
  for (size_t i = 0; i < p.size(); ++i) r[i] = p[q[i]];
  return r;
}

}  // namespace

int FiniteGroup::power(int x, long k) const {
  int n = element_order[x];
  long e = k % n;
  if (e < 0) e += n;
  int r = 0;
  int base = x;
  while (e > 0) {
    if (e & 1) r = mul[r][base];
    base = mul[base][base];
    e >>= 1;
  }
  return r;
}

bool Subgroup::contains(int x) const {
  return std::binary_search(members.begin(), members.end(), x);
}

GroupPtr from_generators(int degree, const std::vector<std::vector<int>>& perms,
                         int bound, const std::vector<std::string>& labels) {
  if (degree < 1) throw InvalidPermutation("degree must be positive");
  std::vector<std::vector<int>> gens;
  for (const auto& p : perms) {
    if (static_cast<int>(p.size()) != degree)
      throw InvalidPermutation("permutation length != degree");
    std::vector<int> q(degree);
    std::vector<char> seen(degree, 0);
    for (int i = 0; i < degree; ++i) {
      int im = p[i] - 1;  // input is 1-indexed
      if (im < 0 || im >= degree || seen[im])
        throw InvalidPermutation("image list is not a bijection");
      seen[im] = 1;
      q[i] = im;
    }
    gens.push_back(std::move(q));
  }

  std::vector<int> identity(degree);
  for (int i = 0; i < degree; ++i) identity[i] = i;

  auto g = std::make_shared<FiniteGroup>();
  g->degree = degree;
  std::map<std::vector<int>, int> index;
  g->elements.push_back(identity);
  index[identity] = 0;
  // breadth-first closure
  for (size_t head = 0; head < g->elements.size(); ++head) {
    for (const auto& s : gens) {
      auto prod = compose(g->elements[head], s);
      if (index.emplace(prod, g->elements.size()).second) {
        g->elements.push_back(std::move(prod));
        if (static_cast<int>(g->elements.size()) > bound)
          throw ClosureTooLarge("closure exceeds bound");
      }
    }
  }
  g->order = static_cast<int>(g->elements.size());

  g->mul.assign(g->order, std::vector<int>(g->order));
  for (int i = 0; i < g->order; ++i)
    for (int j = 0; j < g->order; ++j)
      g->mul[i][j] = index.at(compose(g->elements[i], g->elements[j]));

  g->inv.assign(g->order, -1);
  for (int i = 0; i < g->order; ++i)
    for (int j = 0; j < g->order; ++j)
      if (g->mul[i][j] == 0) {
        g->inv[i] = j;
        break;
      }

  g->element_order.assign(g->order, 1);
  for (int i = 0; i < g->order; ++i) {
    int x = i, n = 1;
    while (x != 0) {
      x = g->mul[x][i];
      ++n;
    }
    g->element_order[i] = n;
  }

  g->class_of.assign(g->order, -1);
  for (int i = 0; i < g->order; ++i) {
    if (g->class_of[i] >= 0) continue;
    int cls = static_cast<int>(g->conjugacy_classes.size());
    std::vector<int> orbit;
    for (int t = 0; t < g->order; ++t) {
      int c = g->conj(i, t);
      if (g->class_of[c] < 0) {
        g->class_of[c] = cls;
        orbit.push_back(c);
      }
    }
    std::sort(orbit.begin(), orbit.end());
    g->conjugacy_classes.push_back(std::move(orbit));
  }

  for (const auto& s : gens) g->generators.push_back(index.at(s));
  g->generator_labels = labels;
  return g;
}

Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens) {
  std::set<int> members = {0};
  std::vector<int> frontier = {0};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier)
      for (int s : gens) {
        int y = g->mul[x][s];
        if (members.insert(y).second) next.push_back(y);
      }
    frontier = std::move(next);
  }
  Subgroup h;
  h.parent = g;
  h.members.assign(members.begin(), members.end());
  h.normal_in_parent = is_normal_in(h, full_subgroup(g));
  return h;
}

Subgroup cyclic_subgroup(const GroupPtr& g, int x) {
  return generated_subgroup(g, {x});
}

Subgroup trivial_subgroup(const GroupPtr& g) { return generated_subgroup(g, {}); }

Subgroup full_subgroup(const GroupPtr& g) {
  Subgroup h;
  h.parent = g;
  h.members.resize(g->order);
  for (int i = 0; i < g->order; ++i) h.members[i] = i;
  h.normal_in_parent = true;
  return h;
}

bool is_subgroup(const GroupPtr& g, const std::vector<int>& members) {
  if (members.empty() || !std::binary_search(members.begin(), members.end(), 0))
    return false;
  for (int x : members)
    for (int y : members)
      if (!std::binary_search(members.begin(), members.end(), g->mul[x][y]))
        return false;
  return true;
}

bool is_normal_in(const Subgroup& k, const Subgroup& h) {
  const auto& g = k.parent;
  for (int x : h.members)
    for (int m : k.members)
      if (!k.contains(g->conj(m, x))) return false;
  return true;
}

std::vector<Subgroup> all_subgroups(const GroupPtr& g, int bound) {
  if (g->order > bound) throw BoundExceeded("all_subgroups: group too large");
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> cyclics;
  for (int x = 0; x < g->order; ++x) {
    auto c = cyclic_subgroup(g, x).members;
    if (seen.insert(c).second) cyclics.push_back(c);
  }
  // breadth-first closure over joins with cyclic subgroups
  std::vector<std::vector<int>> work(seen.begin(), seen.end());
  for (size_t head = 0; head < work.size(); ++head) {
    for (const auto& c : cyclics) {
      std::vector<int> gens;
      gens.insert(gens.end(), work[head].begin(), work[head].end());
      gens.insert(gens.end(), c.begin(), c.end());
      auto join = generated_subgroup(g, gens).members;
      if (seen.insert(join).second) work.push_back(std::move(join));
    }
  }
  std::vector<Subgroup> out;
  for (const auto& m : work) {
    Subgroup h;
    h.parent = g;
    h.members = m;
    h.normal_in_parent = is_normal_in(h, full_subgroup(g));
    out.push_back(std::move(h));
  }
  std::sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.members < b.members;
  });
  return out;
}

namespace {

// Normal closure of K ∪ {x} inside H: generated by K and all H-conjugates
// of x (conjugates of the generators stay in the generating set, so the
// result is normal in H).
std::vector<int> normal_closure_in(const GroupPtr& g, const Subgroup& h,
                                   const std::vector<int>& k, int x) {
  std::set<int> gens(k.begin(), k.end());
  for (int t : h.members) gens.insert(g->conj(x, t));
  return generated_subgroup(g, {gens.begin(), gens.end()}).members;
}

}  // namespace

std::vector<Subgroup> minimal_normal_subgroups(const Subgroup& h,
                                               const Subgroup& k) {
  if (!is_normal_in(k, h)) throw NotNormal("K is not normal in H");
  const auto& g = h.parent;
  std::set<std::vector<int>> candidates;
  for (int x : h.members) {
    if (k.contains(x)) continue;
    candidates.insert(normal_closure_in(g, h, k.members, x));
  }
  std::vector<Subgroup> out;
  for (const auto& m : candidates) {
    bool minimal = true;
    for (const auto& other : candidates) {
      if (other == m) continue;
      if (std::includes(m.begin(), m.end(), other.begin(), other.end())) {
        minimal = false;
        break;
      }
    }
    if (!minimal) continue;
    Subgroup s;
    s.parent = g;
    s.members = m;
    s.normal_in_parent = is_normal_in(s, full_subgroup(g));
    out.push_back(std::move(s));
  }
  std::sort(out.begin(), out.end(),
            [](const Subgroup& a, const Subgroup& b) { return a.members < b.members; });
  return out;
}

std::vector<int> right_transversal(const GroupPtr& g,
                                   const std::vector<int>& stabilizer_members) {
  if (!is_subgroup(g, stabilizer_members))
    throw NotASubgroup("right_transversal: stabilizer is not a subgroup");
  std::vector<char> covered(g->order, 0);
  std::vector<int> reps;
  for (int t = 0; t < g->order; ++t) {
    if (covered[t]) continue;
    reps.push_back(t);
    for (int s : stabilizer_members) covered[g->mul[s][t]] = 1;
  }
  return reps;
}

}  // namespace ringunits
