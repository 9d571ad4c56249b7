#include "drumgeo/group.hpp"

#include <algorithm>
#include <cstdlib>
#include <deque>
#include <string>

#include "drumgeo/error.hpp"

namespace drumgeo {

std::size_t PermGroup::default_cap() {
  if (const char* s = std::getenv("DRUMGEO_MAX_ELEMENTS")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return std::size_t(1) << 20;
}

namespace {

std::vector<Perm> dedupe(std::vector<Perm> gens) {
  std::unordered_set<Perm, PermHash> seen;
  std::vector<Perm> out;
  for (auto& g : gens) {
    if (g.is_identity()) continue;
    if (seen.insert(g).second) out.push_back(std::move(g));
  }
  return out;
}

std::unordered_set<Perm, PermHash> close_under_products(
    int degree, const std::vector<Perm>& gens, std::size_t cap) {
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  seen.insert(Perm::identity(degree));
  todo.push_back(Perm::identity(degree));
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : gens) {
      Perm next = cur * g;
      if (seen.insert(next).second) {
        if (seen.size() > cap)
          throw CapExceeded("group enumeration exceeded cap of " +
                            std::to_string(cap) + " elements");
        todo.push_back(std::move(next));
      }
    }
  }
  return seen;
}

}  // namespace

PermGroup::PermGroup(int degree, std::vector<Perm> generators, std::size_t cap,
                     std::string name)
    : degree_(degree), name_(std::move(name)) {
  for (const Perm& g : generators)
    if (g.degree() != degree)
      throw InvalidPerm("generator degree does not match group degree");
  generators_ = dedupe(std::move(generators));
  auto seen = close_under_products(degree_, generators_, cap);
  elements_.assign(seen.begin(), seen.end());
  finalize();
}

void PermGroup::finalize() {
  std::sort(elements_.begin(), elements_.end());
  index_.reserve(elements_.size() * 2);
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i)
    index_.emplace(elements_[i], i);

  // Conjugacy classes: orbit of each element under conjugation by the
  // generators only (conjugation by a word is iterated generator
  // conjugation), grouped and ordered by least member.
  class_of_.assign(elements_.size(), -1);
  std::vector<std::vector<int>> raw;
  for (int i = 0; i < static_cast<int>(elements_.size()); ++i) {
    if (class_of_[i] >= 0) continue;
    std::vector<int> members{i};
    class_of_[i] = static_cast<int>(raw.size());
    for (std::size_t q = 0; q < members.size(); ++q) {
      const Perm& cur = elements_[members[q]];
      for (const Perm& g : generators_) {
        int j = index_.at(cur.conjugated_by(g));
        if (class_of_[j] < 0) {
          class_of_[j] = class_of_[i];
          members.push_back(j);
        }
      }
    }
    std::sort(members.begin(), members.end());
    raw.push_back(std::move(members));
  }
  // elements_ are sorted, so ordering classes by first member index orders
  // them by lexicographically least representative
  std::vector<int> order(raw.size());
  for (int c = 0; c < static_cast<int>(raw.size()); ++c) order[c] = c;
  std::sort(order.begin(), order.end(),
            [&](int a, int b) { return raw[a][0] < raw[b][0]; });
  std::vector<int> new_id(raw.size());
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos)
    new_id[order[pos]] = pos;
  for (auto& c : class_of_) c = new_id[c];
  classes_.clear();
  for (int pos = 0; pos < static_cast<int>(order.size()); ++pos) {
    auto& members = raw[order[pos]];
    classes_.push_back(ConjugacyClass{elements_[members[0]], std::move(members)});
  }
}

int PermGroup::index_of(const Perm& g) const {
  auto it = index_.find(g);
  if (it == index_.end())
    throw NotMember("permutation is not an element of the group");
  return it->second;
}

GroupPtr make_group(int degree, std::vector<Perm> generators, std::size_t cap,
                    std::string name) {
  return std::make_shared<PermGroup>(degree, std::move(generators), cap,
                                     std::move(name));
}

GroupPtr group_from_elements(int degree, std::vector<Perm> generators,
                             std::vector<Perm> elements, std::string name) {
  auto g = std::shared_ptr<PermGroup>(new PermGroup());
  g->degree_ = degree;
  g->name_ = std::move(name);
  g->generators_ = dedupe(std::move(generators));
  g->elements_ = std::move(elements);
  g->finalize();
  return g;
}

Subgroup make_subgroup(GroupPtr parent, std::vector<Perm> generators) {
  for (const Perm& g : generators)
    if (!parent->contains(g))
      throw NotSubgroup("subgroup generator is not a member of the parent");
  Subgroup s;
  s.parent = parent;
  s.generators = dedupe(std::move(generators));
  std::unordered_set<Perm, PermHash> seen;
  std::deque<Perm> todo;
  seen.insert(Perm::identity(parent->degree()));
  todo.push_back(Perm::identity(parent->degree()));
  while (!todo.empty()) {
    Perm cur = std::move(todo.front());
    todo.pop_front();
    for (const Perm& g : s.generators) {
      Perm next = cur * g;
      if (!seen.count(next)) {
        if (!parent->contains(next))
          throw NotSubgroup("generated element escapes the parent group");
        seen.insert(next);
        todo.push_back(std::move(next));
      }
    }
  }
  s.elements.assign(seen.begin(), seen.end());
  std::sort(s.elements.begin(), s.elements.end());
  s.element_set = std::move(seen);
  return s;
}

Subgroup trivial_subgroup(GroupPtr parent) {
  return make_subgroup(parent, {});
}

Subgroup full_subgroup(GroupPtr parent) {
  return make_subgroup(parent, parent->generators());
}

GroupPtr as_group(const Subgroup& s, std::string name) {
  return group_from_elements(s.parent->degree(), s.generators, s.elements,
                             std::move(name));
}

std::vector<Perm> minimal_generating_subset(const std::vector<Perm>& elements) {
  if (elements.empty()) return {};
  int degree = elements[0].degree();
  std::vector<Perm> gens;
  std::unordered_set<Perm, PermHash> have;
  have.insert(Perm::identity(degree));
  for (const Perm& e : elements) {
    if (have.count(e)) continue;
    gens.push_back(e);
    // re-close with the enlarged generating set
    std::deque<Perm> todo(have.begin(), have.end());
    while (!todo.empty()) {
      Perm cur = std::move(todo.front());
      todo.pop_front();
      for (const Perm& g : gens) {
        Perm next = cur * g;
        if (have.insert(next).second) todo.push_back(std::move(next));
      }
    }
    if (have.size() == elements.size()) break;
  }
  return gens;
}

std::vector<Perm> conjugacy_class(const PermGroup& g, const Perm& x) {
  const auto& cls = g.classes()[g.class_of(x)];
  std::vector<Perm> out;
  out.reserve(cls.members.size());
  for (int i : cls.members) out.push_back(g.elements()[i]);
  return out;
}

long long centralizer_order(const PermGroup& g, const Perm& x) {
  if (!g.contains(x)) throw NotMember("centralizer of a non-member");
  long long n = 0;
  for (const Perm& h : g.elements())
    if (h * x == x * h) ++n;
  return n;
}

}  // namespace drumgeo
