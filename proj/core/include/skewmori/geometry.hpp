#pragma once

// Picard and curve lattices of A(n) in the bases (H, E_1..E_r) and
// (l, e_1..e_r), the divisor-curve pairing, the classical cones, Cox
// generator degrees, the movable cone and the anticanonical class.

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

#include "skewmori/cones.hpp"
#include "skewmori/exact.hpp"

namespace skewmori {

class PicardLattice {
 public:
  // Throws DomainError for n < 2.
  explicit PicardLattice(int n);

  int n() const { return n_; }
  // Number of exceptional classes: (n-3)/2 for odd n, (n-2)/2 for even n.
  int r() const { return r_; }
  std::size_t rank() const { return static_cast<std::size_t>(r_) + 1; }
  // "H", "E1", ... (divisors) or "l", "e1", ... (curves).
  std::vector<std::string> divisor_labels() const;
  std::vector<std::string> curve_labels() const;

  friend bool operator==(const PicardLattice&, const PicardLattice&) = default;

 private:
  int n_;
  int r_;
};

int exceptional_count(int n);

// Coordinates on (H, E_1, ..., E_r).
struct DivisorClass {
  int n = 0;
  std::vector<std::int64_t> coeffs;

  ExactVector vector() const;
  std::string to_string() const;
  friend bool operator==(const DivisorClass&, const DivisorClass&) = default;
  friend auto operator<=>(const DivisorClass&, const DivisorClass&) = default;
};

// Coordinates on (l, e_1, ..., e_r).
struct CurveClass {
  int n = 0;
  std::vector<std::int64_t> coeffs;

  ExactVector vector() const;
  std::string to_string() const;
  friend bool operator==(const CurveClass&, const CurveClass&) = default;
};

// D_{2k+2} = (k+1)H - sum_{h=1..k} (k-h+1)E_h, truncated to the lattice.
// Valid k: 0..(n-2)/2 for even n, 0..(n-1)/2 for odd n, where the last value
// is D_{n+1}.
DivisorClass divisor_class_D(int n, int k);
// E_i for 1 <= i <= r; for odd n, i = (n-1)/2 is accepted as an alias of
// D_{n+1} (the last blow-up is an isomorphism).
DivisorClass exceptional_class(int n, int i);
CurveClass curve_class(int n, std::vector<std::int64_t> coeffs);

// H.l = 1, H.e_i = 0, E_i.l = 0, E_i.e_j = -delta_ij.
std::int64_t pair(const DivisorClass& d, const CurveClass& c);

// For n < 4 both cones are the ray spanned by H.
std::vector<DivisorClass> eff_generators(int n);
std::vector<DivisorClass> nef_generators(int n);
// Throws DomainError for n < 4.
std::vector<CurveClass> mori_generators(int n);

// {D : D.C >= 0 for all C in curves} and the symmetric statement on the
// curve side; the pairing matrix is diag(1, -1, ..., -1).
Cone divisor_dual(const Cone& curves);
Cone curve_dual(const Cone& divisors);

Cone eff_cone(int n);
Cone nef_cone(int n);
Cone mori_cone(int n);
// Cut out by C.E_i >= 0 and C.D >= 0 for the last Eff generator D.
// Throws DomainError for n < 4.
Cone moving_curve_cone(int n);

struct CoxGenerator {
  std::string label;  // "T2", "T4", ... by Pfaffian size, or "S1", "S2", ...
  DivisorClass degree;
  std::int64_t multiplicity = 1;
  bool is_boundary() const { return !label.empty() && label[0] == 'S'; }
};

std::vector<CoxGenerator> cox_generator_degrees(int n);
std::int64_t cox_generator_total(int n);

// Intersection over all generators (with multiplicity) of the cone spanned by
// the remaining degrees. Throws DomainError for n < 4.
Cone movable_cone(int n);
// Predicted extremal ray count: 2^(k-1) for n = 2k+1, 2^(k-2)+1 for n = 2k.
std::size_t movable_ray_count_formula(int n);

// -K = binom(n+1,2) H - sum_h (codim sec_h - 1) E_h. For n >= 4 this checks
// -K.C > 0 on every Mori generator and throws DomainError otherwise.
DivisorClass anticanonical(int n);
std::int64_t fano_index(int n);

}  // namespace skewmori
