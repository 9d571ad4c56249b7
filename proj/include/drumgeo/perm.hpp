#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace drumgeo {

// Permutation of {0, ..., degree-1}, stored as its image sequence.
// Comparison is lexicographic on images, which makes the identity the
// least element of its degree and gives all "canonical representative"
// choices in the library a single well-defined meaning.
class Perm {
 public:
  Perm() = default;
  explicit Perm(std::vector<int> images);  // throws InvalidPerm unless bijective
  static Perm identity(int degree);

  int degree() const { return static_cast<int>(images_.size()); }
  int operator()(int i) const { return images_[i]; }
  const std::vector<int>& images() const { return images_; }

  bool is_identity() const;
  int num_fixed() const;
  long long order() const;

  Perm inverse() const;
  // g^{-1} * (*this) * g
  Perm conjugated_by(const Perm& g) const;

  bool operator==(const Perm& o) const { return images_ == o.images_; }
  bool operator<(const Perm& o) const { return images_ < o.images_; }

 private:
  std::vector<int> images_;
};

// Function composition: (a * b)(i) = a(b(i)); b acts first.
Perm operator*(const Perm& a, const Perm& b);

// Disjoint-cycle notation, fixed points omitted; "()" for the identity.
std::string to_string(const Perm& p);

struct PermHash {
  std::size_t operator()(const Perm& p) const {
    std::uint64_t h = 1469598103934665603ull;
    for (int x : p.images()) {
      h ^= static_cast<std::uint64_t>(x);
      h *= 1099511628211ull;
    }
    return static_cast<std::size_t>(h);
  }
};

}  // namespace drumgeo
