#pragma once

#include <memory>
#include <string>
#include <vector>

#include "ringunits/errors.hpp"

namespace ringunits {

/// A finite group materialized as a full multiplication table.
/// Element 0 is always the identity.  Elements are the distinct permutations
/// in the closure of the input generators, in breadth-first discovery order.
struct FiniteGroup {
  int order = 0;
  int degree = 0;  // permutation degree the group was built from
  std::vector<std::vector<int>> elements;  // element -> image list (0-based)
  std::vector<std::vector<int>> mul;       // mul[x][y] = index of x*y
  std::vector<int> inv;
  std::vector<int> element_order;
  std::vector<std::vector<int>> conjugacy_classes;  // class 0 = {identity}
  std::vector<int> class_of;
  std::vector<int> generators;  // element indices of the input generators
  std::vector<std::string> generator_labels;

  int num_classes() const { return static_cast<int>(conjugacy_classes.size()); }
  // Power with integer exponent (negative allowed).
  int power(int x, long k) const;
  int conj(int x, int g) const {  // g^-1 x g
    return mul[mul[inv[g]][x]][g];
  }
};

using GroupPtr = std::shared_ptr<const FiniteGroup>;

struct Subgroup {
  GroupPtr parent;
  std::vector<int> members;  // sorted, contains 0
  bool normal_in_parent = false;

  int order() const { return static_cast<int>(members.size()); }
  bool contains(int x) const;
};

/// Closure of permutation generators.  `perms` are 1-indexed image lists
/// on {1..degree} as they appear in input files; internally 0-based.
GroupPtr from_generators(int degree, const std::vector<std::vector<int>>& perms,
                         int bound = 2048,
                         const std::vector<std::string>& labels = {});

/// Convenience: the subgroup generated by the given element indices.
Subgroup generated_subgroup(const GroupPtr& g, const std::vector<int>& gens);

Subgroup cyclic_subgroup(const GroupPtr& g, int x);
Subgroup trivial_subgroup(const GroupPtr& g);
Subgroup full_subgroup(const GroupPtr& g);

bool is_subgroup(const GroupPtr& g, const std::vector<int>& members);
bool is_normal_in(const Subgroup& k, const Subgroup& h);

/// Every subgroup exactly once, sorted by order then lexicographic member set.
std::vector<Subgroup> all_subgroups(const GroupPtr& g, int bound = 512);

/// Subgroups M with K < M <= H and M/K minimal normal in H/K.
std::vector<Subgroup> minimal_normal_subgroups(const Subgroup& h,
                                               const Subgroup& k);

/// One representative per right coset of the given subgroup, identity first.
std::vector<int> right_transversal(const GroupPtr& g,
                                   const std::vector<int>& stabilizer_members);

}  // namespace ringunits
