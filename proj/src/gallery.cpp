#include "drumgeo/gallery.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <string>
#include <utility>

#include "drumgeo/error.hpp"

namespace drumgeo {

namespace {

bool is_prime(int p) {
  if (p < 2) return false;
  for (int d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

int smallest_primitive_root(int p) {
  std::vector<int> prime_factors;
  int m = p - 1;
  for (int d = 2; d * d <= m; ++d)
    if (m % d == 0) {
      prime_factors.push_back(d);
      while (m % d == 0) m /= d;
    }
  if (m > 1) prime_factors.push_back(m);
  auto pow_mod = [p](long long b, long long e) {
    long long r = 1 % p;
    b %= p;
    while (e) {
      if (e & 1) r = r * b % p;
      b = b * b % p;
      e >>= 1;
    }
    return static_cast<int>(r);
  };
  for (int g = 2; g < p; ++g) {
    bool primitive = true;
    for (int q : prime_factors)
      if (pow_mod(g, (p - 1) / q) == 1) {
        primitive = false;
        break;
      }
    if (primitive) return g;
  }
  throw Error("no primitive root found");
}

using Vec = std::vector<int>;
using Mat = std::vector<Vec>;

Mat identity_matrix(int n) {
  Mat m(n, Vec(n, 0));
  for (int i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

// Restriction actions of a combined-domain group: elements permute
// {0..mu-1} (points) and {mu..mu+nu-1} (lines).
std::pair<PermutationAction, PermutationAction> split_actions(
    const GroupPtr& group, int mu, int nu) {
  std::vector<std::vector<int>> ptab(group->size()), ltab(group->size());
  for (std::size_t i = 0; i < group->size(); ++i) {
    const Perm& e = group->elements()[i];
    ptab[i].resize(mu);
    ltab[i].resize(nu);
    for (int x = 0; x < mu; ++x) ptab[i][x] = e(x);
    for (int x = 0; x < nu; ++x) ltab[i][x] = e(mu + x) - mu;
  }
  return {action_from_table(group, mu, std::move(ptab)),
          action_from_table(group, nu, std::move(ltab))};
}

}  // namespace

ProjectiveGeometry projective_geometry(const ProjectiveSpec& spec,
                                       std::size_t cap) {
  const int n = spec.n;
  const int p = spec.p;
  if (!is_prime(p)) throw NonPrime("field size must be prime, got " + std::to_string(p));
  if (n < 3) throw DegenerateParameters("projective construction needs n >= 3");

  // Normalized representatives of F_p^n \ {0} in lexicographic order.
  std::vector<Vec> reps;
  Vec v(n, 0);
  for (;;) {
    int i = n - 1;
    while (i >= 0 && v[i] == p - 1) v[i--] = 0;
    if (i < 0) break;
    ++v[i];
    int first = 0;
    while (v[first] == 0) ++first;
    if (v[first] == 1) reps.push_back(v);
  }
  const int mu = static_cast<int>(reps.size());
  if (static_cast<std::size_t>(mu) > cap)
    throw CapExceeded("too many projective points for the cap");

  std::map<Vec, int> index;
  for (int i = 0; i < mu; ++i) index[reps[i]] = i;

  auto inv_mod = [p](int a) {
    int r = 1;
    for (int e = p - 2; e > 0; --e) r = r * a % p;
    return r == 0 ? 1 : r;
  };
  auto normalize_index = [&](Vec x) {
    int first = 0;
    while (first < n && x[first] == 0) ++first;
    const int scale = inv_mod(x[first]);
    for (int& c : x) c = c * scale % p;
    return index.at(x);
  };
  auto mat_vec = [&](const Mat& m, const Vec& x) {
    Vec y(n, 0);
    for (int i = 0; i < n; ++i) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += m[i][k] * x[k];
      y[i] = s % p;
    }
    return y;
  };
  auto vec_mat = [&](const Vec& x, const Mat& m) {
    Vec y(n, 0);
    for (int j = 0; j < n; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += x[k] * m[k][j];
      y[j] = s % p;
    }
    return y;
  };

  // Generator matrices with explicit inverses: all transvections, plus one
  // dilation by a primitive root when the field has one beyond 1.
  std::vector<std::pair<Mat, Mat>> mats;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) continue;
      Mat m = identity_matrix(n), mi = identity_matrix(n);
      m[i][j] = 1;
      mi[i][j] = p - 1;
      mats.emplace_back(std::move(m), std::move(mi));
    }
  if (p > 2) {
    const int root = smallest_primitive_root(p);
    Mat m = identity_matrix(n), mi = identity_matrix(n);
    m[0][0] = root;
    mi[0][0] = inv_mod(root);
    mats.emplace_back(std::move(m), std::move(mi));
  }

  std::vector<Perm> gens;
  for (const auto& [m, mi] : mats) {
    std::vector<int> im(2 * mu);
    for (int i = 0; i < mu; ++i) im[i] = normalize_index(mat_vec(m, reps[i]));
    for (int i = 0; i < mu; ++i)
      im[mu + i] = mu + normalize_index(vec_mat(reps[i], mi));
    gens.emplace_back(std::move(im));
  }

  GroupPtr group = make_group(2 * mu, std::move(gens), cap,
                              "pgl" + std::to_string(n) + "_" + std::to_string(p));

  IncidenceGeometry geo;
  geo.num_points = mu;
  geo.num_lines = mu;
  geo.incidence = BitMatrix(mu, mu);
  for (int i = 0; i < mu; ++i)
    for (int j = 0; j < mu; ++j) {
      int s = 0;
      for (int k = 0; k < n; ++k) s += reps[i][k] * reps[j][k];
      if (s % p == 0) geo.incidence.set(i, j, true);
    }

  auto [pa, la] = split_actions(group, mu, mu);
  DGeometry dg = make_dgeometry(std::move(geo), group, std::move(pa), std::move(la));
  GSTriple triple = triple_at_incident_flag(dg);
  return ProjectiveGeometry{std::move(dg), std::move(triple)};
}

QuadraticDesign quadratic_design(const QuadraticDesignSpec& spec,
                                 std::size_t cap) {
  const int m = spec.m;
  if (m < 2)
    throw DegenerateParameters(
        "quadratic designs need half-dimension m >= 2 (m = 1 degenerates)");
  if (2 * m >= 20 || (std::size_t(1) << (2 * m)) > cap)
    throw CapExceeded("too many vectors for the cap");
  const int nv = 1 << (2 * m);
  const bool elliptic = spec.form == FormType::kElliptic;

  auto q = [m, elliptic](int x) {
    int v = 0;
    for (int i = 0; i < m; ++i) v ^= ((x >> (2 * i)) & (x >> (2 * i + 1))) & 1;
    if (elliptic) v ^= ((x >> 0) ^ (x >> 1)) & 1;
    return v;
  };

  IncidenceGeometry geo;
  geo.num_points = nv;
  geo.num_lines = nv;
  geo.incidence = BitMatrix(nv, nv);
  for (int v = 0; v < nv; ++v)
    for (int b = 0; b < nv; ++b)
      if (q(v ^ b)) geo.incidence.set(v, b, true);

  std::vector<Perm> gens;
  for (int bit = 0; bit < 2 * m; ++bit) {
    std::vector<int> im(2 * nv);
    for (int x = 0; x < nv; ++x) {
      im[x] = x ^ (1 << bit);
      im[nv + x] = nv + (x ^ (1 << bit));
    }
    gens.emplace_back(std::move(im));
  }
  GroupPtr group = make_group(
      2 * nv, std::move(gens), cap,
      std::string(elliptic ? "s_plus_" : "s_minus_") + std::to_string(2 * m));

  auto [pa, la] = split_actions(group, nv, nv);
  DGeometry dg = make_dgeometry(std::move(geo), group, std::move(pa), std::move(la));

  std::optional<DesignParameters> params = is_symmetric_design(dg.geometry);
  const int eps = elliptic ? 1 : -1;
  const int expect_k = nv / 2 + eps * (1 << (m - 1));
  const int expect_lambda = nv / 4 + eps * (1 << (m - 1));
  if (!params || params->k != expect_k || params->lambda != expect_lambda)
    throw Error("quadratic design parameters failed verification");
  return QuadraticDesign{std::move(dg), *params};
}

DGeometry dihedral_geometry(int n) {
  if (n < 3) throw DegenerateParameters("a polygon needs at least 3 vertices");
  IncidenceGeometry geo;
  geo.num_points = n;
  geo.num_lines = n;
  geo.incidence = BitMatrix(n, n);
  for (int i = 0; i < n; ++i) {
    geo.incidence.set(i, i, true);
    geo.incidence.set(i, (i + 1) % n, true);
  }

  std::vector<int> rot(2 * n), ref(2 * n);
  for (int i = 0; i < n; ++i) {
    rot[i] = (i + 1) % n;
    rot[n + i] = n + (i + 1) % n;
    ref[i] = (n - i) % n;
    ref[n + i] = n + (n - i + 1) % n;
  }
  GroupPtr group = make_group(
      2 * n, {Perm(std::move(rot)), Perm(std::move(ref))},
      PermGroup::default_cap(), "d" + std::to_string(n));

  auto [pa, la] = split_actions(group, n, n);
  return make_dgeometry(std::move(geo), group, std::move(pa), std::move(la));
}

GroupPtr symmetric_top(int n) {
  if (n < 1) throw DegenerateParameters("degree must be positive");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<int> t(n);
    std::iota(t.begin(), t.end(), 0);
    std::swap(t[0], t[1]);
    gens.emplace_back(std::move(t));
  }
  if (n >= 3) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.emplace_back(std::move(c));
  }
  return make_group(n, std::move(gens), PermGroup::default_cap(),
                    "s" + std::to_string(n));
}

GroupPtr cyclic_top(int n) {
  if (n < 1) throw DegenerateParameters("degree must be positive");
  std::vector<Perm> gens;
  if (n >= 2) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = (i + 1) % n;
    gens.emplace_back(std::move(c));
  }
  return make_group(n, std::move(gens), PermGroup::default_cap(),
                    "c" + std::to_string(n));
}

GSTriple wreath_triple(const WreathSpec& spec, std::size_t cap) {
  if (spec.copies < 2)
    throw DegenerateParameters("wreath construction needs at least 2 copies");
  if (!spec.top || spec.top->degree() != spec.copies)
    throw DegenerateParameters("top group degree must equal the copy count");
  {
    std::vector<std::vector<int>> table;
    table.reserve(spec.top->size());
    for (const Perm& t : spec.top->elements()) table.push_back(t.images());
    if (!action_from_table(spec.top, spec.copies, std::move(table)).is_transitive())
      throw NotTransitive("top group must be transitive on the copies");
  }

  const GSTriple& base = spec.base;
  // The per-copy domain is the base group's combined coset domain, which is
  // faithful exactly when no nontrivial normal subgroup sits in both base
  // subgroups; without that the advertised order would silently shrink.
  {
    Subgroup cl = core(base.group, base.left);
    Subgroup cr = core(base.group, base.right);
    for (const Perm& x : cl.elements)
      if (!x.is_identity() && cr.contains(x))
        throw PreconditionUnmet(
            "base triple has a nontrivial common core; reduce it first");
  }

  Int order(static_cast<unsigned long>(base.group->size()));
  mpz_pow_ui(order.get_mpz_t(), order.get_mpz_t(),
             static_cast<unsigned long>(spec.copies));
  order *= static_cast<unsigned long>(spec.top->size());
  if (order > Int(static_cast<unsigned long>(cap)))
    throw CapExceeded("wreath order " + order.get_str() + " exceeds cap");

  PermutationAction pa = coset_action(base.group, base.left);
  PermutationAction la = coset_action(base.group, base.right);
  const int d1 = pa.num_points;
  const int d = d1 + la.num_points;
  const int total = spec.copies * d;

  // Image of a base element on the combined per-copy domain.
  auto base_row = [&](const Perm& a) {
    const int idx = base.group->index_of(a);
    std::vector<int> row(d);
    for (int x = 0; x < d1; ++x) row[x] = pa.table[idx][x];
    for (int x = d1; x < d; ++x) row[x] = d1 + la.table[idx][x - d1];
    return row;
  };
  auto embed_block0 = [&](const Perm& a) {
    std::vector<int> im(total);
    std::iota(im.begin(), im.end(), 0);
    const std::vector<int> row = base_row(a);
    for (int x = 0; x < d; ++x) im[x] = row[x];
    return Perm(std::move(im));
  };
  auto block_shuffle = [&](const Perm& t) {
    std::vector<int> im(total);
    for (int b = 0; b < spec.copies; ++b)
      for (int x = 0; x < d; ++x) im[b * d + x] = t(b) * d + x;
    return Perm(std::move(im));
  };

  std::vector<Perm> ggens, ugens, vgens;
  for (const Perm& a : base.group->generators()) ggens.push_back(embed_block0(a));
  for (const Perm& a : base.left.generators) ugens.push_back(embed_block0(a));
  for (const Perm& a : base.right.generators) vgens.push_back(embed_block0(a));
  for (const Perm& t : spec.top->generators()) {
    ggens.push_back(block_shuffle(t));
    ugens.push_back(block_shuffle(t));
    vgens.push_back(block_shuffle(t));
  }

  GroupPtr group = make_group(total, std::move(ggens), cap,
                              base.group->name() + "_wr_" + spec.top->name());
  if (Int(static_cast<unsigned long>(group->size())) != order)
    throw Error("wreath order identity failed");
  GSTriple t = make_triple(group, std::move(ugens), std::move(vgens));

  auto side_order = [&](std::size_t n) {
    Int o(static_cast<unsigned long>(n));
    mpz_pow_ui(o.get_mpz_t(), o.get_mpz_t(),
               static_cast<unsigned long>(spec.copies));
    o *= static_cast<unsigned long>(spec.top->size());
    return o;
  };
  if (Int(static_cast<unsigned long>(t.left.size())) !=
          side_order(base.left.size()) ||
      Int(static_cast<unsigned long>(t.right.size())) !=
          side_order(base.right.size()))
    throw Error("wreath subgroup order identity failed");
  return t;
}

namespace {

Triangle lattice_triangle(int x0, int y0, int x1, int y1, int x2, int y2) {
  return Triangle{{RPoint{Rational(x0), Rational(y0)},
                   RPoint{Rational(x1), Rational(y1)},
                   RPoint{Rational(x2), Rational(y2)}}};
}

}  // namespace

std::pair<TileDomain, TileDomain> gww_domains() {
  std::vector<Triangle> a{
      lattice_triangle(0, 0, 1, 0, 0, 1),
      lattice_triangle(0, 0, -1, 0, 0, -1),
      lattice_triangle(1, -1, 1, -2, 0, -1),
      lattice_triangle(0, 0, 1, 0, 0, -1),
      lattice_triangle(1, -1, 1, 0, 0, -1),
      lattice_triangle(1, -1, 1, -2, 2, -1),
      lattice_triangle(2, -2, 1, -2, 2, -1),
  };
  std::vector<Triangle> b{
      lattice_triangle(0, 0, 1, 0, 0, 1),
      lattice_triangle(0, 0, -1, 0, 0, -1),
      lattice_triangle(1, 1, 1, 2, 0, 1),
      lattice_triangle(0, 0, 1, 0, 0, -1),
      lattice_triangle(1, 1, 1, 0, 0, 1),
      lattice_triangle(1, 1, 1, 2, 2, 1),
      lattice_triangle(0, 2, 1, 2, 0, 1),
  };
  return {TileDomain(std::move(a)), TileDomain(std::move(b))};
}

}  // namespace drumgeo
