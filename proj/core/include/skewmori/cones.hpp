#pragma once

// Rational polyhedral cones through the origin, kept in double representation:
// extremal rays + lineality on the generator side, facet normals + equations
// on the constraint side. Both sides are canonical (primitive integer vectors,
// lexicographically sorted), so two equal cones have identical data.

#include <cstddef>
#include <span>
#include <vector>

#include "skewmori/exact.hpp"

namespace skewmori {

class Cone {
 public:
  // Nonnegative hull of `generators` in R^rank. An empty list gives the zero
  // cone. Throws DimensionError on a length mismatch.
  static Cone from_generators(std::size_t rank, const std::vector<ExactVector>& generators);

  // {x : n.x >= 0 for n in normals, e.x = 0 for e in equations}.
  static Cone from_inequalities(std::size_t rank, const std::vector<ExactVector>& normals,
                                const std::vector<ExactVector>& equations = {});

  static Cone zero(std::size_t rank);
  static Cone full_space(std::size_t rank);

  std::size_t ambient_rank() const { return rank_; }

  // Extremal rays modulo the lineality space (projected onto its orthogonal
  // complement). Empty for the zero cone and for linear subspaces.
  const std::vector<IntVector>& rays() const { return rays_; }
  // Basis of the lineality space in reduced echelon form; empty iff pointed.
  const std::vector<IntVector>& lineality() const { return lineality_; }
  // Irredundant facet normals, projected onto the linear span of the cone.
  const std::vector<IntVector>& facets() const { return facets_; }
  // Basis of span(cone)^perp; empty iff the cone is full-dimensional.
  const std::vector<IntVector>& equations() const { return equations_; }

  bool is_pointed() const { return lineality_.empty(); }
  bool is_full_dimensional() const { return equations_.empty(); }
  std::size_t dim() const { return rank_ - equations_.size(); }

  bool contains(std::span<const mpq_class> v) const;
  // Relative interior: strictly positive on every facet, zero on equations.
  bool interior_contains(std::span<const mpq_class> v) const;

  // Rays plus both signs of every lineality vector.
  std::vector<ExactVector> generators() const;
  // Facet normals plus both signs of every equation.
  std::vector<ExactVector> inequalities() const;

  // Sum of the rays: a point in the relative interior of a pointed cone.
  ExactVector interior_point() const;

  friend bool operator==(const Cone& a, const Cone& b) = default;

 private:
  std::size_t rank_ = 0;
  std::vector<IntVector> rays_;
  std::vector<IntVector> lineality_;
  std::vector<IntVector> facets_;
  std::vector<IntVector> equations_;
};

Cone cone_from_generators(const std::vector<ExactVector>& generators);
Cone cone_from_generators(std::size_t rank, const std::vector<ExactVector>& generators);

// {f : f.x >= 0 for all x in c}. dual(dual(c)) == c.
Cone dual(const Cone& c);

Cone intersect(const Cone& a, const Cone& b);
Cone intersect(std::span<const Cone> cones);

bool contains(const Cone& c, std::span<const mpq_class> v);
bool interior_contains(const Cone& c, std::span<const mpq_class> v);
// a is a subset of b.
bool contains(const Cone& b, const Cone& a);

std::vector<ExactVector> extremal_rays(const Cone& c);
std::size_t dim(const Cone& c);

// Mutual containment of generators.
bool equal(const Cone& a, const Cone& b);

}  // namespace skewmori
