#include "drumgeo/perm.hpp"

#include <numeric>
#include <string>

#include "drumgeo/error.hpp"

namespace drumgeo {

Perm::Perm(std::vector<int> images) : images_(std::move(images)) {
  std::vector<char> seen(images_.size(), 0);
  for (int x : images_) {
    if (x < 0 || x >= degree() || seen[x])
      throw InvalidPerm("image sequence is not a bijection on 0.." +
                        std::to_string(degree() - 1));
    seen[x] = 1;
  }
}

Perm Perm::identity(int degree) {
  std::vector<int> im(degree);
  std::iota(im.begin(), im.end(), 0);
  return Perm(std::move(im));
}

bool Perm::is_identity() const {
  for (int i = 0; i < degree(); ++i)
    if (images_[i] != i) return false;
  return true;
}

int Perm::num_fixed() const {
  int n = 0;
  for (int i = 0; i < degree(); ++i)
    if (images_[i] == i) ++n;
  return n;
}

long long Perm::order() const {
  long long ord = 1;
  std::vector<char> seen(images_.size(), 0);
  for (int i = 0; i < degree(); ++i) {
    if (seen[i]) continue;
    long long len = 0;
    for (int j = i; !seen[j]; j = images_[j]) {
      seen[j] = 1;
      ++len;
    }
    ord = std::lcm(ord, len);
  }
  return ord;
}

Perm Perm::inverse() const {
  std::vector<int> im(images_.size());
  for (int i = 0; i < degree(); ++i) im[images_[i]] = i;
  return Perm(std::move(im));
}

Perm Perm::conjugated_by(const Perm& g) const {
  return g.inverse() * (*this) * g;
}

Perm operator*(const Perm& a, const Perm& b) {
  if (a.degree() != b.degree())
    throw InvalidPerm("composing permutations of different degrees");
  std::vector<int> im(a.degree());
  for (int i = 0; i < a.degree(); ++i) im[i] = a(b(i));
  return Perm(std::move(im));
}

std::string to_string(const Perm& p) {
  std::string out;
  std::vector<char> seen(p.degree(), 0);
  for (int i = 0; i < p.degree(); ++i) {
    if (seen[i] || p(i) == i) continue;
    out += '(';
    bool first = true;
    for (int j = i; !seen[j]; j = p(j)) {
      seen[j] = 1;
      if (!first) out += ' ';
      out += std::to_string(j);
      first = false;
    }
    out += ')';
  }
  return out.empty() ? "()" : out;
}

}  // namespace drumgeo
