#include "skewmori/chambers.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <utility>

#include "skewmori/errors.hpp"
#include "skewmori/geometry.hpp"
#include "skewmori/parallel.hpp"

namespace skewmori {

VectorConfiguration::VectorConfiguration(std::size_t rank, std::vector<ConfigGroup> groups, int n)
    : n_(n), rank_(rank), groups_(std::move(groups)) {
  if (rank == 0) throw DimensionError("configuration rank must be positive");
  std::vector<ExactVector> degrees;
  std::set<IntVector> dirs;
  for (const auto& g : groups_) {
    if (g.degree.size() != rank) throw DimensionError("configuration vector has the wrong length");
    if (is_zero(g.degree)) throw DomainError("configuration vector is zero");
    if (g.multiplicity < 1) throw DomainError("configuration multiplicity must be positive");
    degrees.push_back(g.degree);
    dirs.insert(primitive(g.degree));
  }
  ambient_ = Cone::from_generators(rank, degrees);
  directions_.assign(dirs.begin(), dirs.end());
}

VectorConfiguration VectorConfiguration::cox(int n) {
  std::vector<ConfigGroup> groups;
  for (const auto& g : cox_generator_degrees(n)) {
    groups.push_back({g.label, g.degree.vector(), g.multiplicity, g.is_boundary()});
  }
  return VectorConfiguration(PicardLattice(n).rank(), std::move(groups), n);
}

VectorConfiguration VectorConfiguration::from_vectors(const std::vector<ExactVector>& vectors) {
  if (vectors.empty()) throw DimensionError("configuration needs at least one vector");
  std::vector<ConfigGroup> groups;
  for (std::size_t i = 0; i < vectors.size(); ++i) groups.push_back({"v" + std::to_string(i + 1), vectors[i], 1, true});
  return VectorConfiguration(vectors.front().size(), std::move(groups));
}

std::string label_string(const ForcedLabel& label) {
  std::string s;
  for (const auto& part : label_strings(label)) {
    if (!s.empty()) s += ", ";
    s += part;
  }
  return s.empty() ? "{}" : "{" + s + "}";
}

std::vector<std::string> label_strings(const ForcedLabel& label) {
  std::vector<std::string> out;
  for (const auto& set : label) {
    std::string s;
    for (const auto& g : set) {
      if (!s.empty()) s += "&";
      s += g;
    }
    out.push_back(s);
  }
  return out;
}

const char* zone_name(Zone z) {
  switch (z) {
    case Zone::Nef: return "nef";
    case Zone::Movable: return "movable";
    case Zone::Effective: return "effective";
    case Zone::None: break;
  }
  return "none";
}

namespace {

void check_rank(const VectorConfiguration& config) {
  if (config.rank() > kMaxChamberRank)
    throw DomainError("chamber computations support rank <= " + std::to_string(kMaxChamberRank));
}

// Cones of all linearly independent subsets of the distinct directions. By
// Caratheodory these suffice for the chamber intersection.
std::vector<Cone> simplicial_cones(const VectorConfiguration& config) {
  const auto& dirs = config.directions();
  const std::size_t m = dirs.size();
  const std::size_t d = config.rank();
  std::vector<Cone> out;
  for (std::size_t size = 1; size <= std::min(d, m); ++size) {
    std::vector<std::size_t> pick(size);
    for (std::size_t i = 0; i < size; ++i) pick[i] = i;
    for (;;) {
      std::vector<ExactVector> vs;
      for (auto i : pick) vs.push_back(to_exact(dirs[i]));
      if (rank_of(vs, d) == size) out.push_back(Cone::from_generators(d, vs));
      std::size_t pos = size;
      while (pos > 0 && pick[pos - 1] == m - size + pos - 1) --pos;
      if (pos == 0) break;
      ++pick[pos - 1];
      for (std::size_t i = pos; i < size; ++i) pick[i] = pick[i - 1] + 1;
    }
  }
  return out;
}

GKZChamber chamber_from(const VectorConfiguration& config, const std::vector<Cone>& simplices, const ExactVector& w) {
  if (w.size() != config.rank()) throw DimensionError("chamber_of: vector has the wrong length");
  if (!config.ambient().contains(w)) throw DomainError("chamber_of: vector is outside the ambient cone");
  std::set<IntVector> normals, equations;
  for (const auto& s : simplices) {
    if (!s.contains(w)) continue;
    normals.insert(s.facets().begin(), s.facets().end());
    equations.insert(s.equations().begin(), s.equations().end());
  }
  std::vector<ExactVector> ns, es;
  for (const auto& v : normals) ns.push_back(to_exact(v));
  for (const auto& v : equations) es.push_back(to_exact(v));
  GKZChamber ch;
  ch.cone = Cone::from_inequalities(config.rank(), ns, es);
  ch.maximal = ch.cone.is_full_dimensional();
  ch.representative = ch.cone.interior_point();
  ch.forced = forced_groups(config, ch.maximal ? ch.representative : w);
  return ch;
}

std::vector<ExactVector> hyperplanes(const VectorConfiguration& config) {
  const auto& dirs = config.directions();
  const std::size_t d = config.rank();
  std::set<IntVector> found;
  if (d < 2 || dirs.size() < d - 1) return {};
  const std::size_t size = d - 1;
  const std::size_t m = dirs.size();
  std::vector<std::size_t> pick(size);
  for (std::size_t i = 0; i < size; ++i) pick[i] = i;
  for (;;) {
    std::vector<ExactVector> vs;
    for (auto i : pick) vs.push_back(to_exact(dirs[i]));
    if (rank_of(vs, d) == size) {
      auto ker = kernel_basis(ExactMatrix::from_rows(vs, d));
      IntVector h = primitive(ker.front());
      auto lead = std::find_if(h.begin(), h.end(), [](const mpz_class& x) { return sgn(x) != 0; });
      if (sgn(*lead) < 0) {
        for (auto& x : h) x = -x;
      }
      found.insert(h);
    }
    std::size_t pos = size;
    while (pos > 0 && pick[pos - 1] == m - size + pos - 1) --pos;
    if (pos == 0) break;
    ++pick[pos - 1];
    for (std::size_t i = pos; i < size; ++i) pick[i] = pick[i - 1] + 1;
  }
  std::vector<ExactVector> out;
  for (const auto& h : found) out.push_back(to_exact(h));
  return out;
}

std::vector<Cone> split(const Cone& cell, const ExactVector& h) {
  bool pos = false, neg = false;
  for (const auto& r : cell.rays()) {
    const int s = sgn(dot(to_exact(r), h));
    pos |= s > 0;
    neg |= s < 0;
  }
  if (!(pos && neg)) return {cell};
  ExactVector minus = h;
  for (auto& x : minus) x = -x;
  std::vector<Cone> out;
  for (const auto& normal : {h, minus}) {
    auto ineqs = cell.inequalities();
    ineqs.push_back(normal);
    out.push_back(Cone::from_inequalities(cell.ambient_rank(), ineqs));
  }
  return out;
}

Zone zone_of(int n, const Cone& nef, const Cone& mov, const ExactVector& w) {
  if (n < 4) return Zone::Nef;
  if (nef.contains(w)) return Zone::Nef;
  if (mov.contains(w)) return Zone::Movable;
  return Zone::Effective;
}

}  // namespace

GKZChamber chamber_of(const VectorConfiguration& config, const ExactVector& w) {
  check_rank(config);
  return chamber_from(config, simplicial_cones(config), w);
}

ForcedLabel forced_groups(const VectorConfiguration& config, const ExactVector& w) {
  const auto& groups = config.groups();
  std::vector<std::size_t> candidates;
  for (std::size_t i = 0; i < groups.size(); ++i) {
    if (groups[i].boundary) candidates.push_back(i);
  }
  if (candidates.size() > 20) throw DomainError("forced_groups: too many boundary groups");
  std::vector<std::uint32_t> minimal;
  const std::uint32_t total = std::uint32_t{1} << candidates.size();
  // Masks by popcount so every minimal set is found before its supersets.
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 1; m < total; ++m) masks.push_back(m);
  std::stable_sort(masks.begin(), masks.end(),
                   [](std::uint32_t a, std::uint32_t b) { return __builtin_popcount(a) < __builtin_popcount(b); });
  for (auto mask : masks) {
    if (std::any_of(minimal.begin(), minimal.end(), [&](std::uint32_t f) { return (f & mask) == f; })) continue;
    std::vector<bool> excluded(groups.size(), false);
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if (mask & (std::uint32_t{1} << b)) excluded[candidates[b]] = true;
    }
    std::vector<ExactVector> rest;
    for (std::size_t i = 0; i < groups.size(); ++i) {
      if (!excluded[i]) rest.push_back(groups[i].degree);
    }
    if (!Cone::from_generators(config.rank(), rest).contains(w)) minimal.push_back(mask);
  }
  ForcedLabel label;
  for (auto mask : minimal) {
    std::vector<std::string> set;
    for (std::size_t b = 0; b < candidates.size(); ++b) {
      if (mask & (std::uint32_t{1} << b)) set.push_back(groups[candidates[b]].label);
    }
    label.push_back(std::move(set));
  }
  std::sort(label.begin(), label.end(), [](const auto& a, const auto& b) {
    if (a.size() != b.size()) return a.size() < b.size();
    return a < b;
  });
  return label;
}

std::vector<Region> sbl_regions(const Decomposition& decomposition) {
  std::vector<Region> regions;
  std::map<ForcedLabel, std::size_t> index;
  for (std::size_t c = 0; c < decomposition.chambers.size(); ++c) {
    const auto& label = decomposition.chambers[c].forced;
    auto [it, inserted] = index.emplace(label, regions.size());
    if (inserted) regions.push_back({label, {}});
    regions[it->second].chambers.push_back(c);
  }
  return regions;
}

Decomposition gkz_chambers(const VectorConfiguration& config, std::size_t threads) {
  check_rank(config);
  if (!config.ambient().is_full_dimensional())
    throw DomainError("gkz_chambers: the ambient cone is not full-dimensional");
  const std::size_t d = config.rank();

  std::vector<Cone> cells{config.ambient()};
  for (const auto& h : hyperplanes(config)) {
    std::vector<std::vector<Cone>> parts(cells.size());
    parallel_for(cells.size(), [&](std::size_t i) { parts[i] = split(cells[i], h); }, threads);
    std::vector<Cone> next;
    for (auto& p : parts) {
      for (auto& c : p) next.push_back(std::move(c));
    }
    cells = std::move(next);
  }

  const auto simplices = simplicial_cones(config);
  std::vector<GKZChamber> found(cells.size());
  parallel_for(
      cells.size(), [&](std::size_t i) { found[i] = chamber_from(config, simplices, cells[i].interior_point()); },
      threads);

  std::sort(found.begin(), found.end(), [](const GKZChamber& a, const GKZChamber& b) { return a.cone.rays() < b.cone.rays(); });
  found.erase(std::unique(found.begin(), found.end(),
                          [](const GKZChamber& a, const GKZChamber& b) { return a.cone == b.cone; }),
              found.end());

  Decomposition out;
  out.n = config.n();
  out.rank = d;
  out.chambers = std::move(found);
  if (config.n() >= 4) {
    const Cone nef = nef_cone(config.n());
    const Cone mov = movable_cone(config.n());
    for (auto& ch : out.chambers) ch.zone = zone_of(config.n(), nef, mov, ch.representative);
  } else if (config.n() >= 2) {
    for (auto& ch : out.chambers) ch.zone = Zone::Nef;
  }
  for (std::size_t i = 0; i < out.chambers.size(); ++i) {
    for (std::size_t j = i + 1; j < out.chambers.size(); ++j) {
      Cone w = intersect(out.chambers[i].cone, out.chambers[j].cone);
      if (w.dim() + 1 == d) out.walls.push_back({i, j, std::move(w)});
    }
  }
  out.regions = sbl_regions(out);
  for (std::size_t r = 0; r < out.regions.size(); ++r) {
    for (auto c : out.regions[r].chambers) out.chambers[c].region = r;
  }
  return out;
}

ConjectureCounts conjecture_counts(int n, std::size_t threads) {
  if (n < 4) throw DomainError("conjecture_counts: need n >= 4");
  const auto dec = gkz_chambers(VectorConfiguration::cox(n), threads);
  ConjectureCounts out;
  out.n = n;
  std::set<ForcedLabel> labels;
  for (const auto& region : dec.regions) {
    if (dec.chambers[region.chambers.front()].zone == Zone::Effective) labels.insert(region.label);
  }
  out.computed = labels.size();
  for (const auto& l : labels) {
    out.computed_labels.push_back(l);
    if (std::all_of(l.begin(), l.end(), [](const auto& s) { return s.size() == 1; })) ++out.divisorial;
  }

  const int m = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
  const int top = n % 2 ? m - 1 : m;  // largest union size
  std::set<ForcedLabel> predicted;
  for (std::uint32_t mask = 1; mask < (std::uint32_t{1} << m); ++mask) {
    if (__builtin_popcount(mask) > top) continue;
    ForcedLabel l;
    for (int i = 0; i < m; ++i) {
      if (mask & (std::uint32_t{1} << i)) l.push_back({"S" + std::to_string(i + 1)});
    }
    std::sort(l.begin(), l.end());
    predicted.insert(l);
  }
  out.predicted = n % 2 ? (std::size_t{1} << m) - 2 : (std::size_t{1} << m) - 1;
  out.predicted_labels.assign(predicted.begin(), predicted.end());
  out.labels_match = labels == predicted;
  return out;
}

namespace {

int blowup_top(int n) {
  if (n < 4) throw DomainError("blowup_one_decomposition: need n >= 4");
  return n % 2 ? (n - 1) / 2 : (n - 2) / 2;
}

ExactVector blowup_D(int k) { return make_vector({k + 1, -k}); }

}  // namespace

ForcedLabel blowup_one_label(int n, const ExactVector& w) {
  const int top = blowup_top(n);
  if (w.size() != 2) throw DimensionError("blowup_one_label: expected a rank-2 class");
  const ExactVector e1 = make_vector({0, 1});
  if (!Cone::from_generators(2, {e1, blowup_D(top)}).contains(w))
    throw DomainError("blowup_one_label: class is not effective");
  if (!Cone::from_generators(2, {blowup_D(0), blowup_D(top)}).contains(w)) return {{"E1"}};
  // Beyond D_{2h} means w is not in <E_1, D_2, ..., D_{2h}>.
  for (int h = top; h >= 2; --h) {
    if (!Cone::from_generators(2, {e1, blowup_D(h - 1)}).contains(w)) return {{"sec" + std::to_string(h)}};
  }
  return {};
}

Decomposition blowup_one_decomposition(int n) {
  const int top = blowup_top(n);
  Decomposition out;
  out.n = n;
  out.rank = 2;
  const ExactVector e1 = make_vector({0, 1});
  std::vector<ExactVector> rays{e1};
  for (int k = 0; k <= top; ++k) rays.push_back(blowup_D(k));
  for (std::size_t i = 0; i + 1 < rays.size(); ++i) {
    GKZChamber ch;
    ch.cone = Cone::from_generators(2, {rays[i], rays[i + 1]});
    ch.representative = ch.cone.interior_point();
    ch.maximal = true;
    ch.forced = blowup_one_label(n, ch.representative);
    if (i == 0) ch.zone = Zone::Effective;
    else if (i == 1) ch.zone = Zone::Nef;
    // Mov(A(n)_1) ends at D_{n-1} for odd n and at D_n for even n.
    else ch.zone = (n % 2 && i + 2 == rays.size()) ? Zone::Effective : Zone::Movable;
    out.chambers.push_back(std::move(ch));
  }
  std::sort(out.chambers.begin(), out.chambers.end(),
            [](const GKZChamber& a, const GKZChamber& b) { return a.cone.rays() < b.cone.rays(); });
  for (std::size_t i = 0; i < out.chambers.size(); ++i) {
    for (std::size_t j = i + 1; j < out.chambers.size(); ++j) {
      Cone w = intersect(out.chambers[i].cone, out.chambers[j].cone);
      if (w.dim() == 1) out.walls.push_back({i, j, std::move(w)});
    }
  }
  out.regions = sbl_regions(out);
  for (std::size_t r = 0; r < out.regions.size(); ++r) {
    for (auto c : out.regions[r].chambers) out.chambers[c].region = r;
  }
  return out;
}

}  // namespace skewmori
