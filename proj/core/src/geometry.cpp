#include "skewmori/geometry.hpp"

#include <algorithm>
#include <numeric>
#include <utility>

#include "skewmori/errors.hpp"
#include "skewmori/pfaffian.hpp"

namespace skewmori {

namespace {

std::string coeffs_string(const std::vector<std::int64_t>& c) {
  std::string s = "(";
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (i) s += ",";
    s += std::to_string(c[i]);
  }
  return s + ")";
}

ExactVector coeffs_vector(const std::vector<std::int64_t>& c) { return to_exact(std::span<const std::int64_t>(c)); }

void require_n(int n, int lo, const char* what) {
  if (n < lo) throw DomainError(std::string(what) + ": need n >= " + std::to_string(lo));
}

// Largest k with a T group of size 2k+2.
int max_t_index(int n) { return n % 2 ? (n - 3) / 2 : (n - 2) / 2; }

// Multiply by the pairing matrix diag(1, -1, ..., -1).
ExactVector flip(ExactVector v) {
  for (std::size_t i = 1; i < v.size(); ++i) v[i] = -v[i];
  return v;
}

std::vector<ExactVector> vectors_of(const std::vector<DivisorClass>& ds) {
  std::vector<ExactVector> out;
  for (const auto& d : ds) out.push_back(d.vector());
  return out;
}

}  // namespace

int exceptional_count(int n) {
  require_n(n, 2, "PicardLattice");
  if (n <= 3) return 0;
  return n % 2 ? (n - 3) / 2 : (n - 2) / 2;
}

PicardLattice::PicardLattice(int n) : n_(n), r_(exceptional_count(n)) {}

std::vector<std::string> PicardLattice::divisor_labels() const {
  std::vector<std::string> out{"H"};
  for (int i = 1; i <= r_; ++i) out.push_back("E" + std::to_string(i));
  return out;
}

std::vector<std::string> PicardLattice::curve_labels() const {
  std::vector<std::string> out{"l"};
  for (int i = 1; i <= r_; ++i) out.push_back("e" + std::to_string(i));
  return out;
}

ExactVector DivisorClass::vector() const { return coeffs_vector(coeffs); }
std::string DivisorClass::to_string() const { return coeffs_string(coeffs); }
ExactVector CurveClass::vector() const { return coeffs_vector(coeffs); }
std::string CurveClass::to_string() const { return coeffs_string(coeffs); }

DivisorClass divisor_class_D(int n, int k) {
  const PicardLattice lat(n);
  const int kmax = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
  if (k < 0 || k > kmax) throw DomainError("divisor_class_D: k out of range for n = " + std::to_string(n));
  DivisorClass d{n, std::vector<std::int64_t>(lat.rank(), 0)};
  d.coeffs[0] = k + 1;
  for (int h = 1; h <= std::min(k, lat.r()); ++h) d.coeffs[static_cast<std::size_t>(h)] = -(k - h + 1);
  return d;
}

DivisorClass exceptional_class(int n, int i) {
  const PicardLattice lat(n);
  if (n % 2 && n >= 3 && i == (n - 1) / 2) return divisor_class_D(n, (n - 1) / 2);
  if (i < 1 || i > lat.r()) throw DomainError("exceptional_class: i out of range for n = " + std::to_string(n));
  DivisorClass e{n, std::vector<std::int64_t>(lat.rank(), 0)};
  e.coeffs[static_cast<std::size_t>(i)] = 1;
  return e;
}

CurveClass curve_class(int n, std::vector<std::int64_t> coeffs) {
  const PicardLattice lat(n);
  if (coeffs.size() != lat.rank()) throw DimensionError("curve_class: wrong number of coordinates");
  return CurveClass{n, std::move(coeffs)};
}

std::int64_t pair(const DivisorClass& d, const CurveClass& c) {
  if (d.n != c.n || d.coeffs.size() != c.coeffs.size()) throw DimensionError("pair: lattice mismatch");
  std::int64_t s = d.coeffs[0] * c.coeffs[0];
  for (std::size_t i = 1; i < d.coeffs.size(); ++i) s -= d.coeffs[i] * c.coeffs[i];
  return s;
}

std::vector<DivisorClass> eff_generators(int n) {
  const PicardLattice lat(n);
  if (n < 4) return {divisor_class_D(n, 0)};
  std::vector<DivisorClass> out;
  for (int i = 1; i <= lat.r(); ++i) out.push_back(exceptional_class(n, i));
  out.push_back(divisor_class_D(n, n % 2 ? (n - 1) / 2 : (n - 2) / 2));
  return out;
}

std::vector<DivisorClass> nef_generators(int n) {
  require_n(n, 2, "nef_generators");
  if (n < 4) return {divisor_class_D(n, 0)};
  std::vector<DivisorClass> out;
  for (int j = 0; j <= max_t_index(n); ++j) out.push_back(divisor_class_D(n, j));
  return out;
}

std::vector<CurveClass> mori_generators(int n) {
  require_n(n, 4, "mori_generators");
  const PicardLattice lat(n);
  const int r = lat.r();
  const std::size_t rank = lat.rank();
  // With e_0 := l: e_{i-1} - 2e_i + e_{i+1} (i < r), e_{r-1} - 2e_r, e_r.
  std::vector<CurveClass> out;
  for (int i = 1; i <= r; ++i) {
    std::vector<std::int64_t> c(rank, 0);
    c[static_cast<std::size_t>(i - 1)] = 1;
    c[static_cast<std::size_t>(i)] = -2;
    if (i < r) c[static_cast<std::size_t>(i + 1)] = 1;
    out.push_back(CurveClass{n, std::move(c)});
  }
  std::vector<std::int64_t> last(rank, 0);
  last[static_cast<std::size_t>(r)] = 1;
  out.push_back(CurveClass{n, std::move(last)});
  return out;
}

Cone divisor_dual(const Cone& curves) {
  std::vector<ExactVector> gens;
  for (auto& g : dual(curves).generators()) gens.push_back(flip(std::move(g)));
  return Cone::from_generators(curves.ambient_rank(), gens);
}

Cone curve_dual(const Cone& divisors) { return divisor_dual(divisors); }

Cone eff_cone(int n) { return Cone::from_generators(PicardLattice(n).rank(), vectors_of(eff_generators(n))); }
Cone nef_cone(int n) { return Cone::from_generators(PicardLattice(n).rank(), vectors_of(nef_generators(n))); }

Cone mori_cone(int n) {
  std::vector<ExactVector> gens;
  for (const auto& c : mori_generators(n)) gens.push_back(c.vector());
  return Cone::from_generators(PicardLattice(n).rank(), gens);
}

Cone moving_curve_cone(int n) {
  require_n(n, 4, "moving_curve_cone");
  std::vector<ExactVector> normals;
  for (const auto& d : eff_generators(n)) normals.push_back(flip(d.vector()));
  return Cone::from_inequalities(PicardLattice(n).rank(), normals);
}

std::vector<CoxGenerator> cox_generator_degrees(int n) {
  require_n(n, 2, "cox_generator_degrees");
  std::vector<CoxGenerator> out;
  for (int k = 0; k <= max_t_index(n); ++k) {
    mpz_class m;
    mpz_bin_uiui(m.get_mpz_t(), static_cast<unsigned long>(n + 1), static_cast<unsigned long>(2 * k + 2));
    out.push_back({"T" + std::to_string(2 * k + 2), divisor_class_D(n, k), m.get_si()});
  }
  const int smax = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
  for (int i = 1; i <= smax; ++i) out.push_back({"S" + std::to_string(i), exceptional_class(n, i), 1});
  return out;
}

std::int64_t cox_generator_total(int n) {
  std::int64_t total = 0;
  for (const auto& g : cox_generator_degrees(n)) total += g.multiplicity;
  return total;
}

Cone movable_cone(int n) {
  require_n(n, 4, "movable_cone");
  const auto gens = cox_generator_degrees(n);
  const std::size_t rank = PicardLattice(n).rank();
  std::vector<Cone> pieces;
  for (std::size_t i = 0; i < gens.size(); ++i) {
    // Dropping one copy of a repeated degree leaves the span unchanged.
    if (gens[i].multiplicity > 1) continue;
    std::vector<ExactVector> rest;
    for (std::size_t j = 0; j < gens.size(); ++j) {
      if (j != i) rest.push_back(gens[j].degree.vector());
    }
    pieces.push_back(Cone::from_generators(rank, rest));
  }
  if (pieces.empty()) return eff_cone(n);
  return intersect(std::span<const Cone>(pieces));
}

std::size_t movable_ray_count_formula(int n) {
  require_n(n, 4, "movable_ray_count_formula");
  const int k = n / 2;
  if (n % 2) return std::size_t{1} << (k - 1);
  return (std::size_t{1} << (k - 2)) + 1;
}

DivisorClass anticanonical(int n) {
  const PicardLattice lat(n);
  DivisorClass k{n, std::vector<std::int64_t>(lat.rank(), 0)};
  k.coeffs[0] = static_cast<std::int64_t>(n) * (n + 1) / 2;
  for (int h = 1; h <= lat.r(); ++h) k.coeffs[static_cast<std::size_t>(h)] = -(codim_secant(n, h) - 1);
  if (n >= 4) {
    for (const auto& c : mori_generators(n)) {
      if (pair(k, c) <= 0) throw DomainError("anticanonical: -K is not ample for n = " + std::to_string(n));
    }
  }
  return k;
}

std::int64_t fano_index(int n) {
  std::int64_t g = 0;
  for (auto c : anticanonical(n).coeffs) g = std::gcd(g, c);
  return g;
}

}  // namespace skewmori
