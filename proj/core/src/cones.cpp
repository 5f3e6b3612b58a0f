#include "skewmori/cones.hpp"

#include <algorithm>
#include <bit>
#include <cstdint>
#include <utility>

#include "skewmori/errors.hpp"

namespace skewmori {
namespace {

class Bitset {
 public:
  explicit Bitset(std::size_t bits = 0) : words_((bits + 63) / 64, 0) {}
  void set(std::size_t i) { words_[i / 64] |= std::uint64_t{1} << (i % 64); }
  std::size_t count() const {
    std::size_t c = 0;
    for (auto w : words_) c += static_cast<std::size_t>(std::popcount(w));
    return c;
  }
  bool contains(const Bitset& other) const {
    for (std::size_t i = 0; i < words_.size(); ++i) {
      if ((other.words_[i] & ~words_[i]) != 0) return false;
    }
    return true;
  }
  friend Bitset operator&(const Bitset& a, const Bitset& b) {
    Bitset r = a;
    for (std::size_t i = 0; i < r.words_.size(); ++i) r.words_[i] &= b.words_[i];
    return r;
  }

 private:
  std::vector<std::uint64_t> words_;
};

struct Ray {
  IntVector v;
  Bitset tight;
};

struct DDResult {
  std::vector<IntVector> rays;
  std::vector<IntVector> lineality;
};

IntVector combine(const mpz_class& s, const IntVector& x, const mpz_class& t, const IntVector& y) {
  IntVector out(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) out[i] = s * x[i] - t * y[i];
  return primitive(out);
}

// Generators of {x in R^d : a.x >= 0 for every row a}, by the incremental
// double description method with the combinatorial adjacency test.
DDResult double_description(std::size_t d, const std::vector<IntVector>& rows) {
  std::vector<IntVector> lin;
  for (std::size_t i = 0; i < d; ++i) {
    IntVector e(d, 0);
    e[i] = 1;
    lin.push_back(std::move(e));
  }
  std::vector<Ray> rays;
  const std::size_t m = rows.size();

  for (std::size_t idx = 0; idx < m; ++idx) {
    const IntVector& a = rows[idx];
    if (std::all_of(a.begin(), a.end(), [](const mpz_class& x) { return sgn(x) == 0; })) continue;

    auto hit = std::find_if(lin.begin(), lin.end(), [&](const IntVector& l) { return sgn(dot(a, l)) != 0; });
    if (hit != lin.end()) {
      IntVector l0 = std::move(*hit);
      lin.erase(hit);
      mpz_class s = dot(a, l0);
      if (sgn(s) < 0) {
        for (auto& x : l0) x = -x;
        s = -s;
      }
      for (auto& l : lin) {
        mpz_class t = dot(a, l);
        if (sgn(t) != 0) l = combine(s, l, t, l0);
      }
      for (auto& r : rays) {
        mpz_class t = dot(a, r.v);
        if (sgn(t) != 0) r.v = combine(s, r.v, t, l0);
        r.tight.set(idx);
      }
      // l0 was in the lineality space, hence tight on every earlier row.
      Bitset tight(m);
      for (std::size_t j = 0; j < idx; ++j) tight.set(j);
      rays.push_back({std::move(l0), std::move(tight)});
      continue;
    }

    std::vector<mpz_class> val(rays.size());
    std::vector<std::size_t> pos, neg;
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      const int sg = sgn(val[i]);
      if (sg > 0) pos.push_back(i);
      else if (sg < 0) neg.push_back(i);
    }
    if (neg.empty()) {
      for (std::size_t i = 0; i < rays.size(); ++i) {
        if (sgn(val[i]) == 0) rays[i].tight.set(idx);
      }
      continue;
    }

    const std::size_t pointed_dim = d - lin.size();
    std::vector<Ray> next;
    for (auto p : pos) {
      for (auto q : neg) {
        Bitset common = rays[p].tight & rays[q].tight;
        if (pointed_dim >= 2 && common.count() + 2 < pointed_dim) continue;
        bool adjacent = true;
        for (std::size_t r = 0; r < rays.size() && adjacent; ++r) {
          if (r != p && r != q && rays[r].tight.contains(common)) adjacent = false;
        }
        if (!adjacent) continue;
        // val[p] > 0 > val[q]: val[p]*q - val[q]*p is a positive combination.
        IntVector v = combine(val[p], rays[q].v, val[q], rays[p].v);
        common.set(idx);
        next.push_back({std::move(v), std::move(common)});
      }
    }
    for (std::size_t i = 0; i < rays.size(); ++i) {
      const int sg = sgn(val[i]);
      if (sg > 0) next.push_back(std::move(rays[i]));
      else if (sg == 0) {
        rays[i].tight.set(idx);
        next.push_back(std::move(rays[i]));
      }
    }
    rays = std::move(next);
  }

  DDResult out;
  out.lineality = std::move(lin);
  for (auto& r : rays) out.rays.push_back(std::move(r.v));
  return out;
}

IntVector to_int_row(std::span<const mpq_class> v) { return primitive(v); }

// Canonical basis of a subspace: reduced echelon rows scaled to primitive
// integer vectors.
std::vector<IntVector> canonical_basis(const std::vector<IntVector>& vs, std::size_t d) {
  if (vs.empty()) return {};
  std::vector<ExactVector> rows;
  rows.reserve(vs.size());
  for (const auto& v : vs) rows.push_back(to_exact(v));
  std::vector<std::size_t> piv;
  ExactMatrix r = rref(ExactMatrix::from_rows(rows, d), &piv);
  std::vector<IntVector> out;
  for (std::size_t i = 0; i < piv.size(); ++i) out.push_back(primitive(r.row(i)));
  return out;
}

// Orthogonal projection of each vector onto the complement of span(basis),
// made primitive, deduplicated, zero vectors dropped, sorted.
std::vector<IntVector> canonical_rays(const std::vector<IntVector>& vs, const std::vector<IntVector>& basis,
                                      std::size_t d) {
  std::vector<IntVector> out;
  if (basis.empty()) {
    for (const auto& v : vs) {
      IntVector p = primitive(v);
      if (std::any_of(p.begin(), p.end(), [](const mpz_class& x) { return sgn(x) != 0; })) out.push_back(std::move(p));
    }
  } else {
    const std::size_t k = basis.size();
    ExactMatrix gram(k, k);
    std::vector<ExactVector> b;
    for (const auto& x : basis) b.push_back(to_exact(x));
    for (std::size_t i = 0; i < k; ++i) {
      for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(b[i], b[j]);
    }
    const ExactMatrix gram_inv = inverse(gram);
    for (const auto& v : vs) {
      ExactVector x = to_exact(v);
      ExactVector proj(k);
      for (std::size_t i = 0; i < k; ++i) proj[i] = dot(b[i], x);
      ExactVector coef = gram_inv * std::span<const mpq_class>(proj);
      for (std::size_t i = 0; i < k; ++i) {
        if (sgn(coef[i]) == 0) continue;
        for (std::size_t c = 0; c < d; ++c) x[c] -= coef[i] * b[i][c];
      }
      if (!is_zero(x)) out.push_back(primitive(x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

void check_lengths(std::size_t rank, const std::vector<ExactVector>& vs, const char* what) {
  for (const auto& v : vs) {
    if (v.size() != rank) throw DimensionError(std::string(what) + ": vector length differs from ambient rank");
  }
}

ExactVector negated(const IntVector& v) {
  ExactVector out;
  out.reserve(v.size());
  for (const auto& x : v) out.emplace_back(-x);
  return out;
}

}  // namespace

Cone Cone::from_generators(std::size_t rank, const std::vector<ExactVector>& generators) {
  if (rank == 0) throw DimensionError("cone: ambient rank must be positive");
  check_lengths(rank, generators, "cone_from_generators");

  std::vector<IntVector> gens;
  for (const auto& g : generators) {
    if (!is_zero(g)) gens.push_back(to_int_row(g));
  }

  // Facets are the extremal rays of the dual {f : g.f >= 0}; its lineality
  // space is span(generators)^perp.
  DDResult dual_dd = double_description(rank, gens);
  Cone c;
  c.rank_ = rank;
  c.equations_ = canonical_basis(dual_dd.lineality, rank);
  c.facets_ = canonical_rays(dual_dd.rays, c.equations_, rank);

  std::vector<IntVector> rows = c.facets_;
  for (const auto& e : c.equations_) {
    rows.push_back(e);
    IntVector neg = e;
    for (auto& x : neg) x = -x;
    rows.push_back(std::move(neg));
  }
  DDResult primal = double_description(rank, rows);
  c.lineality_ = canonical_basis(primal.lineality, rank);
  c.rays_ = canonical_rays(primal.rays, c.lineality_, rank);
  return c;
}

Cone Cone::from_inequalities(std::size_t rank, const std::vector<ExactVector>& normals,
                             const std::vector<ExactVector>& equations) {
  if (rank == 0) throw DimensionError("cone: ambient rank must be positive");
  check_lengths(rank, normals, "cone_from_inequalities");
  check_lengths(rank, equations, "cone_from_inequalities");
  std::vector<IntVector> rows;
  for (const auto& n : normals) rows.push_back(to_int_row(n));
  for (const auto& e : equations) {
    IntVector p = to_int_row(e);
    rows.push_back(p);
    for (auto& x : p) x = -x;
    rows.push_back(std::move(p));
  }
  DDResult dd = double_description(rank, rows);
  std::vector<ExactVector> gens;
  for (const auto& r : dd.rays) gens.push_back(to_exact(r));
  for (const auto& l : dd.lineality) {
    gens.push_back(to_exact(l));
    gens.push_back(negated(l));
  }
  return from_generators(rank, gens);
}

Cone Cone::zero(std::size_t rank) { return from_generators(rank, {}); }

Cone Cone::full_space(std::size_t rank) { return from_inequalities(rank, {}); }

bool Cone::contains(std::span<const mpq_class> v) const {
  if (v.size() != rank_) throw DimensionError("contains: vector length differs from ambient rank");
  for (const auto& e : equations_) {
    if (sgn(dot(to_exact(e), v)) != 0) return false;
  }
  for (const auto& f : facets_) {
    if (sgn(dot(to_exact(f), v)) < 0) return false;
  }
  return true;
}

bool Cone::interior_contains(std::span<const mpq_class> v) const {
  if (v.size() != rank_) throw DimensionError("interior_contains: vector length differs from ambient rank");
  for (const auto& e : equations_) {
    if (sgn(dot(to_exact(e), v)) != 0) return false;
  }
  for (const auto& f : facets_) {
    if (sgn(dot(to_exact(f), v)) <= 0) return false;
  }
  return true;
}

std::vector<ExactVector> Cone::generators() const {
  std::vector<ExactVector> out;
  for (const auto& r : rays_) out.push_back(to_exact(r));
  for (const auto& l : lineality_) {
    out.push_back(to_exact(l));
    out.push_back(negated(l));
  }
  return out;
}

std::vector<ExactVector> Cone::inequalities() const {
  std::vector<ExactVector> out;
  for (const auto& f : facets_) out.push_back(to_exact(f));
  for (const auto& e : equations_) {
    out.push_back(to_exact(e));
    out.push_back(negated(e));
  }
  return out;
}

ExactVector Cone::interior_point() const {
  ExactVector p(rank_);
  for (const auto& r : rays_) {
    for (std::size_t i = 0; i < rank_; ++i) p[i] += r[i];
  }
  return p;
}

Cone cone_from_generators(const std::vector<ExactVector>& generators) {
  if (generators.empty()) throw DimensionError("cone_from_generators: empty list needs an explicit rank");
  return Cone::from_generators(generators.front().size(), generators);
}

Cone cone_from_generators(std::size_t rank, const std::vector<ExactVector>& generators) {
  return Cone::from_generators(rank, generators);
}

Cone dual(const Cone& c) { return Cone::from_generators(c.ambient_rank(), c.inequalities()); }

Cone intersect(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("intersect: ambient ranks differ");
  std::vector<ExactVector> rows = a.inequalities();
  for (auto& r : b.inequalities()) rows.push_back(std::move(r));
  return Cone::from_inequalities(a.ambient_rank(), rows);
}

Cone intersect(std::span<const Cone> cones) {
  if (cones.empty()) throw DimensionError("intersect: no cones given");
  const std::size_t rank = cones.front().ambient_rank();
  std::vector<IntVector> seen;
  std::vector<ExactVector> rows;
  for (const auto& c : cones) {
    if (c.ambient_rank() != rank) throw DimensionError("intersect: ambient ranks differ");
    for (auto& r : c.inequalities()) {
      IntVector key = primitive(r);
      if (std::find(seen.begin(), seen.end(), key) != seen.end()) continue;
      seen.push_back(std::move(key));
      rows.push_back(std::move(r));
    }
  }
  return Cone::from_inequalities(rank, rows);
}

bool contains(const Cone& c, std::span<const mpq_class> v) { return c.contains(v); }

bool interior_contains(const Cone& c, std::span<const mpq_class> v) { return c.interior_contains(v); }

bool contains(const Cone& b, const Cone& a) {
  if (a.ambient_rank() != b.ambient_rank()) throw DimensionError("contains: ambient ranks differ");
  for (const auto& g : a.generators()) {
    if (!b.contains(g)) return false;
  }
  return true;
}

std::vector<ExactVector> extremal_rays(const Cone& c) {
  std::vector<ExactVector> out;
  for (const auto& r : c.rays()) out.push_back(to_exact(r));
  return out;
}

std::size_t dim(const Cone& c) { return c.dim(); }

bool equal(const Cone& a, const Cone& b) {
  if (a.ambient_rank() != b.ambient_rank()) return false;
  return contains(a, b) && contains(b, a);
}

}  // namespace skewmori
