#pragma once

#include <cstddef>
#include <memory>
#include <string>
#include <unordered_map>
#include <unordered_set>
#include <vector>

#include "drumgeo/perm.hpp"

namespace drumgeo {

struct ConjugacyClass {
  Perm rep;                  // lexicographically least member
  std::vector<int> members;  // element indices, ascending
};

// Finite permutation group given by generators. Construction enumerates the
// whole element set (breadth-first closure over generator products, capped)
// and the conjugacy classes; the object is immutable afterwards, so shared
// reads are safe.
class PermGroup {
 public:
  static std::size_t default_cap();  // 2^20, overridable via DRUMGEO_MAX_ELEMENTS

  PermGroup(int degree, std::vector<Perm> generators,
            std::size_t cap = default_cap(), std::string name = "");

  int degree() const { return degree_; }
  const std::string& name() const { return name_; }
  const std::vector<Perm>& generators() const { return generators_; }
  const std::vector<Perm>& elements() const { return elements_; }
  std::size_t size() const { return elements_.size(); }

  bool contains(const Perm& g) const { return index_.count(g) != 0; }
  int index_of(const Perm& g) const;  // throws NotMember

  const std::vector<ConjugacyClass>& classes() const { return classes_; }
  int class_of(int element_index) const { return class_of_[element_index]; }
  int class_of(const Perm& g) const { return class_of_[index_of(g)]; }

 private:
  friend std::shared_ptr<const PermGroup> group_from_elements(
      int, std::vector<Perm>, std::vector<Perm>, std::string);
  PermGroup() = default;
  void finalize();  // sort elements, build index, compute classes

  int degree_ = 0;
  std::string name_;
  std::vector<Perm> generators_;
  std::vector<Perm> elements_;
  std::unordered_map<Perm, int, PermHash> index_;
  std::vector<ConjugacyClass> classes_;
  std::vector<int> class_of_;
};

using GroupPtr = std::shared_ptr<const PermGroup>;

GroupPtr make_group(int degree, std::vector<Perm> generators,
                    std::size_t cap = PermGroup::default_cap(),
                    std::string name = "");

// Wraps an already-closed element set (e.g. a homomorphic image) without
// re-running the closure; the caller guarantees closure under products.
GroupPtr group_from_elements(int degree, std::vector<Perm> generators,
                             std::vector<Perm> elements, std::string name = "");

// Subgroup of a fixed parent group. Elements are enumerated at construction.
struct Subgroup {
  GroupPtr parent;
  std::vector<Perm> generators;
  std::vector<Perm> elements;  // sorted
  std::unordered_set<Perm, PermHash> element_set;

  std::size_t size() const { return elements.size(); }
  bool contains(const Perm& g) const { return element_set.count(g) != 0; }
};

// Closure of the generators inside the parent; throws NotSubgroup when a
// generated element is not a parent member.
Subgroup make_subgroup(GroupPtr parent, std::vector<Perm> generators);
Subgroup trivial_subgroup(GroupPtr parent);
Subgroup full_subgroup(GroupPtr parent);

// Promote a subgroup to a standalone group on the same domain.
GroupPtr as_group(const Subgroup& s, std::string name = "");

// Greedy generating subset of a closed element set (small, not minimum).
std::vector<Perm> minimal_generating_subset(const std::vector<Perm>& elements);

// Class of g under conjugation by the whole group (orbit of g under
// generator conjugation), as sorted member permutations.
std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x);

// |C_G(x)| by direct count of commuting elements.
long long centralizer_order(const PermGroup& g, const Perm& x);

}  // namespace drumgeo
