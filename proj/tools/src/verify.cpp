#include <algorithm>
#include <map>
#include <set>
#include <sstream>

#include "skewmori/cli/commands.hpp"
#include "skewmori/errors.hpp"
#include "skewmori/random.hpp"

namespace skewmori::cli {

namespace {

class Suite {
 public:
  Suite(std::string name, std::vector<Check>& out) : name_(std::move(name)), out_(out) {}

  void check(const std::string& name, const std::string& claim, bool pass, const std::string& detail = "") {
    out_.push_back({name_, name, claim, pass, detail});
  }

 private:
  std::string name_;
  std::vector<Check>& out_;
};

std::set<IntVector> ray_set(const Cone& c) { return {c.rays().begin(), c.rays().end()}; }

std::set<IntVector> ray_set(std::initializer_list<std::initializer_list<long>> rays) {
  std::set<IntVector> out;
  for (auto r : rays) out.insert(primitive(make_vector(r)));
  return out;
}

std::string rays_str(const std::set<IntVector>& rays) {
  std::string s;
  for (const auto& r : rays) s += (s.empty() ? "" : " ") + to_string(r);
  return s;
}

std::vector<int> ns_for(const RunConfig& c, int lo, int hi) {
  if (c.n >= 0) {
    if (c.n < lo || c.n > hi) return {};
    return {c.n};
  }
  std::vector<int> out;
  for (int n = lo; n <= hi; ++n) out.push_back(n);
  return out;
}

void suite_fano(const RunConfig&, std::vector<Check>& out) {
  Suite s("fano", out);
  const std::vector<std::int64_t> expected{3, 6, 2, 5, 1, 1, 1};
  std::vector<std::int64_t> got;
  for (int n = 2; n <= 8; ++n) got.push_back(fano_index(n));
  std::string detail;
  for (auto g : got) detail += (detail.empty() ? "" : ",") + std::to_string(g);
  s.check("index table n=2..8", "Fano indices 3,6,2,5,1,1,1", got == expected, detail);
  s.check("-K of A(4)", "-K = 10H - 2E1", anticanonical(4).coeffs == std::vector<std::int64_t>{10, -2},
          anticanonical(4).to_string());
  s.check("-K of A(5)", "-K = 15H - 5E1", anticanonical(5).coeffs == std::vector<std::int64_t>{15, -5},
          anticanonical(5).to_string());
  bool positive = true;
  for (int n = 4; n <= 12; ++n) {
    const auto k = anticanonical(n);
    for (const auto& c : mori_generators(n)) positive &= pair(k, c) > 0;
  }
  s.check("-K ample n=4..12", "-K pairs positively with every Mori generator", positive);
  bool ones = true;
  for (int n = 6; n <= 12; ++n) ones &= fano_index(n) == 1;
  s.check("index 1 for n=6..12", "index 1 from n = 6 on", ones);
}

void suite_cones(const RunConfig& c, std::vector<Check>& out) {
  Suite s("cones", out);
  for (int n : ns_for(c, 4, 12)) {
    const std::string an = "A(" + std::to_string(n) + ")";
    const Cone nef = nef_cone(n), eff = eff_cone(n), mov = movable_cone(n);
    s.check(an + " Nef = dual(Mori)", "the Mori cone is dual to the nef cone", equal(nef, divisor_dual(mori_cone(n))));
    s.check(an + " Eff = dual(moving curves)", "the moving curve cone is dual to the effective cone",
            equal(eff, divisor_dual(moving_curve_cone(n))));
    s.check(an + " Nef in Mov in Eff", "Nef is contained in Mov, Mov in Eff", contains(mov, nef) && contains(eff, mov));
    s.check(an + " Eff pointed", "Eff is a pointed full-dimensional cone", eff.is_pointed() && eff.is_full_dimensional());
  }
}

void suite_movable(const RunConfig& c, std::vector<Check>& out) {
  Suite s("movable", out);
  const std::map<int, std::set<IntVector>> lists{
      {6, ray_set({{3, -2, -1}, {1, 0, 0}, {2, -1, 0}})},
      {7, ray_set({{1, 0, 0}, {2, -1, 0}, {3, -2, -1}, {6, -3, -2}})},
      {8, ray_set({{4, -3, -2, -1}, {3, -2, -1, 0}, {1, 0, 0, 0}, {2, -1, 0, 0}, {6, -3, -2, 0}})}};
  for (const auto& [n, rays] : lists) {
    if (c.n >= 0 && c.n != n) continue;
    const auto got = ray_set(movable_cone(n));
    s.check("Mov(A(" + std::to_string(n) + ")) rays", "explicit movable cone generators", got == rays, rays_str(got));
  }
  for (int n : ns_for(c, 4, 13)) {
    const auto got = movable_cone(n).rays().size();
    s.check("Mov(A(" + std::to_string(n) + ")) ray count", "2^(k-1) rays for n=2k+1, 2^(k-2)+1 for n=2k",
            got == movable_ray_count_formula(n), std::to_string(got));
  }
}

void suite_cox(const RunConfig& c, std::vector<Check>& out) {
  Suite s("cox", out);
  s.check("A(4) generators", "Cox(A(4)) has 16 generators", cox_generator_total(4) == 16,
          std::to_string(cox_generator_total(4)));
  s.check("A(5) generators", "Cox(A(5)) has 32 generators", cox_generator_total(5) == 32,
          std::to_string(cox_generator_total(5)));
  for (int n : ns_for(c, 2, 10)) {
    bool ok = true;
    for (const auto& g : cox_generator_degrees(n)) {
      if (g.label[0] == 'T') {
        mpz_class b;
        mpz_bin_uiui(b.get_mpz_t(), static_cast<unsigned long>(n + 1), std::stoul(g.label.substr(1)));
        ok &= b == g.multiplicity;
      } else {
        ok &= g.multiplicity == 1;
      }
    }
    s.check("A(" + std::to_string(n) + ") multiplicities", "a Pfaffian group of size 2k+2 has binom(n+1, 2k+2) members", ok);
  }
}

void suite_chambers(const RunConfig& c, std::vector<Check>& out) {
  Suite s("chambers", out);
  const std::map<int, std::size_t> counts{{4, 2}, {5, 3}, {6, 5}, {7, 9}, {8, 15}};
  std::map<int, Decomposition> decs;
  for (const auto& [n, want] : counts) {
    if (c.n >= 0 && c.n != n) continue;
    decs[n] = gkz_chambers(VectorConfiguration::cox(n));
    const auto got = decs[n].chambers.size();
    s.check("A(" + std::to_string(n) + "): " + std::to_string(want) + " chambers", "Mori chamber count", got == want,
            std::to_string(got));
  }
  if (decs.count(7)) {
    bool found = false;
    for (const auto& ch : decs[7].chambers) found |= ray_set(ch.cone).count(primitive(make_vector({6, -3, -2}))) > 0;
    s.check("A(7): ray (6,-3,-2)", "new ray D_M = 6D2 - 3E1 - 2E2", found);
  }
  if (decs.count(8)) {
    const std::vector<std::pair<std::string, std::set<IntVector>>> chambers{
        {"Nef", ray_set({{1, 0, 0, 0}, {4, -3, -2, -1}, {2, -1, 0, 0}, {3, -2, -1, 0}})},
        {"flipped Mov chamber", ray_set({{1, 0, 0, 0}, {4, -3, -2, -1}, {6, -3, -2, 0}, {3, -2, -1, 0}})}};
    std::set<std::set<IntVector>> all;
    for (const auto& ch : decs[8].chambers) all.insert(ray_set(ch.cone));
    for (const auto& [name, rays] : chambers) {
      s.check("A(8): " + name, "explicit chamber ray list", all.count(rays) > 0, rays_str(rays));
    }
    std::size_t in_mov = 0;
    for (const auto& ch : decs[8].chambers) in_mov += ch.zone != Zone::Effective;
    s.check("A(8): Mov has 2 chambers", "Mov(A(8)) is Nef plus one flipped chamber", in_mov == 2, std::to_string(in_mov));
  }
  for (auto& [n, d] : decs) {
    bool nef_empty = true;
    for (const auto& ch : d.chambers) {
      if (ch.zone == Zone::Nef) nef_empty &= ch.forced.empty();
    }
    s.check("A(" + std::to_string(n) + "): Nef has empty base locus", "nef classes are base point free", nef_empty);
  }
}

std::vector<std::size_t> merge_pattern(const Decomposition& d) {
  std::vector<std::size_t> sizes;
  for (const auto& r : d.regions) sizes.push_back(r.chambers.size());
  std::sort(sizes.rbegin(), sizes.rend());
  return sizes;
}

void suite_sbl(const RunConfig& c, std::vector<Check>& out) {
  Suite s("sbl", out);
  const std::map<int, std::size_t> counts{{4, 2}, {5, 3}, {6, 4}, {7, 8}, {8, 9}};
  for (const auto& [n, want] : counts) {
    if (c.n >= 0 && c.n != n) continue;
    const auto d = gkz_chambers(VectorConfiguration::cox(n));
    s.check("A(" + std::to_string(n) + "): " + std::to_string(want) + " regions", "stable base locus region count",
            d.regions.size() == want, std::to_string(d.regions.size()));
    if (n == 8) {
      const auto got = merge_pattern(d);
      std::string detail;
      for (auto g : got) detail += (detail.empty() ? "" : ",") + std::to_string(g);
      s.check("A(8): merge pattern", "regions of 3,3,2,2 chambers plus five single chambers",
              got == std::vector<std::size_t>{3, 3, 2, 2, 1, 1, 1, 1, 1}, detail);
    }
  }
}

void suite_conjecture(const RunConfig& c, std::vector<Check>& out) {
  Suite s("conjecture", out);
  const std::map<int, std::size_t> counts{{6, 3}, {7, 6}, {8, 7}};
  for (const auto& [n, want] : counts) {
    if (c.n >= 0 && c.n != n) continue;
    const auto cc = conjecture_counts(n);
    s.check("A(" + std::to_string(n) + "): " + std::to_string(want) + " regions in Eff minus Mov",
            "count equals the conjectured formula", cc.computed == want && cc.predicted == want,
            std::to_string(cc.computed) + " vs " + std::to_string(cc.predicted));
    s.check("A(" + std::to_string(n) + "): E-union labels", "base loci are the listed unions of the E_i",
            cc.labels_match && cc.divisorial == cc.computed);
  }
}

void suite_blowup(const RunConfig& c, std::vector<Check>& out) {
  Suite s("blowup", out);
  for (int n : ns_for(c, 4, 12)) {
    const auto d = blowup_one_decomposition(n);
    const std::size_t want = static_cast<std::size_t>((n - 1) / 2 + 1);
    s.check("A(" + std::to_string(n) + ")_1 chambers", "floor((n-1)/2)+1 chambers, MCD = SBL",
            d.chambers.size() == want && d.regions.size() == want, std::to_string(d.chambers.size()));
  }
  if (c.n < 0 || c.n == 5) {
    const auto d = blowup_one_decomposition(5);
    std::vector<std::string> labels;
    for (const auto& ch : d.chambers) labels.push_back(label_string(ch.forced) + rays_str(ray_set(ch.cone)));
    const std::vector<std::string> want{"{E1}(0,1) (1,0)", "{}(1,0) (2,-1)", "{sec2}(2,-1) (3,-2)"};
    s.check("A(5)_1 regions", "regions [E1,D2), [D2,D4], (D4,D6]", labels == want);
  }
}

void suite_multiplicity(const RunConfig& c, std::vector<Check>& out) {
  Suite s("multiplicity", out);
  MultiplicityOptions opt;
  opt.trials = c.trials;
  opt.bound = c.bound;
  opt.seed = c.seed;
  for (int n : ns_for(c, 1, 8)) {
    std::ostringstream detail;
    bool ok = true;
    for (int k = 0; 2 * k + 2 <= n + 1; ++k) {
      for (int h = 1; h <= (n + 1) / 2; ++h) {
        opt.seed = derive_seed(c.seed, static_cast<std::uint64_t>(100 * n + 10 * k + h));
        const int got = multiplicity_estimate(n, k, h, opt);
        const int want = std::max(k - h + 1, 0);
        ok &= got == want;
        detail << "(" << k << "," << h << ")=" << got << " ";
      }
    }
    s.check("n=" + std::to_string(n) + " grid", "a (2k+2)-Pfaffian vanishes to order max(k-h+1,0) on sec_h", ok,
            detail.str());
  }
}

void suite_secant(const RunConfig& c, std::vector<Check>& out) {
  Suite s("secant", out);
  for (int n : ns_for(c, 3, 8)) {
    bool ok = true;
    std::ostringstream detail;
    for (int h = 1; h < (n + 1) / 2; ++h) {
      const long t = terracini_dim(n, h, c.bound, derive_seed(c.seed, static_cast<std::uint64_t>(10 * n + h)));
      const long d = dim_secant(n, h);
      ok &= t == d && d + codim_secant(n, h) == static_cast<long>(n) * (n + 1) / 2 - 1;
      detail << "h=" << h << ":" << d << " ";
    }
    s.check("n=" + std::to_string(n) + " dimensions", "secant dimensions agree with Terracini", ok, detail.str());
  }
}

void suite_pfaffian(const RunConfig& c, std::vector<Check>& out) {
  Suite s("pfaffian", out);
  s.check("4x4 Pfaffian", "pf = z01*z23 - z02*z13 + z03*z12",
          sub_pfaffian(3, {0, 1, 2, 3}).to_string() == "z01*z23 - z02*z13 + z03*z12");
  IntSampler rng(c.seed);
  bool ok = true;
  for (int m = 2; m <= 10; m += 2) {
    RationalSkewMatrix z(static_cast<std::size_t>(m));
    for (std::size_t i = 0; i < z.size(); ++i) {
      for (std::size_t j = i + 1; j < z.size(); ++j) z.set(i, j, rng.uniform(-c.bound, c.bound));
    }
    const mpq_class pf = pfaffian_value(z);
    ok &= pf * pf == determinant(z.to_matrix());
    ok &= evaluate(sub_pfaffian(m - 1, IndexSet::range(0, m)), z) == pf;
  }
  s.check("pf^2 = det", "Pfaffian squares to the determinant", ok);
}

using SuiteFn = void (*)(const RunConfig&, std::vector<Check>&);

const std::vector<std::pair<std::string, SuiteFn>>& registry() {
  static const std::vector<std::pair<std::string, SuiteFn>> r{
      {"fano", suite_fano},         {"cones", suite_cones},   {"movable", suite_movable},
      {"cox", suite_cox},           {"chambers", suite_chambers}, {"sbl", suite_sbl},
      {"conjecture", suite_conjecture}, {"blowup", suite_blowup}, {"multiplicity", suite_multiplicity},
      {"secant", suite_secant},     {"pfaffian", suite_pfaffian}};
  return r;
}

}  // namespace

const std::vector<std::string>& verify_suites() {
  static const std::vector<std::string> names = [] {
    std::vector<std::string> v;
    for (const auto& [name, fn] : registry()) v.push_back(name);
    return v;
  }();
  return names;
}

std::vector<Check> run_verify(const RunConfig& config) {
  if (!config.only.empty() &&
      std::find(verify_suites().begin(), verify_suites().end(), config.only) == verify_suites().end())
    throw UsageError("unknown suite '" + config.only + "'");
  std::vector<Check> out;
  for (const auto& [name, fn] : registry()) {
    if (!config.only.empty() && config.only != name) continue;
    fn(config, out);
  }
  return out;
}

}  // namespace skewmori::cli
