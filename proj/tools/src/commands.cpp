#include "skewmori/cli/commands.hpp"

#include <algorithm>
#include <sstream>

#include "skewmori/errors.hpp"

namespace skewmori::cli {

namespace {

void require_n(const RunConfig& c) {
  if (c.n < 0) throw DomainError("--n is required");
}

std::string pad(const std::string& s, std::size_t w) { return s + std::string(w > s.size() ? w - s.size() : 0, ' '); }

// Columns padded to their widest cell; the last column is left ragged.
std::string table(const std::vector<std::vector<std::string>>& rows) {
  std::vector<std::size_t> width;
  for (const auto& r : rows) {
    if (width.size() < r.size()) width.resize(r.size(), 0);
    for (std::size_t i = 0; i < r.size(); ++i) width[i] = std::max(width[i], r[i].size());
  }
  std::string out;
  for (const auto& r : rows) {
    std::string line;
    for (std::size_t i = 0; i < r.size(); ++i) line += i + 1 < r.size() ? pad(r[i], width[i] + 2) : r[i];
    out += line + "\n";
  }
  return out;
}

std::string rays_text(const std::vector<IntVector>& rays) {
  std::string s;
  for (const auto& r : rays) s += (s.empty() ? "" : " ") + to_string(r);
  return s;
}

std::string join(const std::vector<std::string>& parts, const std::string& sep) {
  std::string s;
  for (const auto& p : parts) s += (s.empty() ? "" : sep) + p;
  return s;
}

// S_i is read as the exceptional divisor E_i; a joint set means the
// intersection of the divisors.
std::string geometric(const ForcedLabel& label) {
  if (label.empty()) return "empty";
  std::vector<std::string> parts;
  for (const auto& set : label) {
    std::vector<std::string> names;
    for (const auto& g : set) names.push_back(g[0] == 'S' ? "E" + g.substr(1) : g);
    parts.push_back(join(names, " cap "));
  }
  return join(parts, " cup ");
}

std::string decomposition_kind(int n) {
  return n <= 8 ? "Mori chamber decomposition" : "toric refinement";
}

}  // namespace

Json to_json(const RunConfig& c) {
  Json j;
  if (c.n >= 0) j["n"] = c.n;
  j["seed"] = c.seed;
  j["bound"] = c.bound;
  j["trials"] = c.trials;
  j["format"] = c.json ? "json" : "text";
  if (!c.only.empty()) j["only"] = c.only;
  return j;
}

bool Report::ok() const {
  return std::all_of(checks.begin(), checks.end(), [](const Check& c) { return c.pass; });
}

std::string render(const Report& report, bool json) {
  if (!json) return report.text;
  Json j;
  j["command"] = report.command;
  j["config"] = to_json(report.config);
  for (const auto& [k, v] : report.options.items()) j[k] = v;
  for (const auto& [k, v] : report.payload.items()) j[k] = v;
  return j.dump(2) + "\n";
}

Report cmd_pfaffian(const RunConfig& config, int size, const std::vector<int>& minor) {
  if (size < 0 && config.n >= 0) size = config.n + 1;
  if (size < 2) throw DomainError("pfaffian: give --size >= 2 or --n >= 1");
  std::vector<int> idx = minor;
  if (idx.empty()) {
    for (int i = 0; i < size; ++i) idx.push_back(i);
  }
  const IndexSet set(idx);
  if (set.max() >= size) throw DomainError("pfaffian: minor index exceeds the matrix size");
  const Polynomial p = sub_pfaffian(size - 1, set);
  Report r;
  r.command = "pfaffian";
  r.config = config;
  r.options["size"] = size;
  r.options["minor"] = idx;
  r.payload["polynomial"] = to_json(p);
  r.payload["text"] = p.to_string();
  r.payload["degree"] = p.total_degree();
  r.payload["terms"] = p.terms().size();
  r.text = p.to_string() + "\n";
  return r;
}

Report cmd_classes(const RunConfig& config) {
  require_n(config);
  const int n = config.n;
  const PicardLattice lat(n);
  Report r;
  r.command = "classes";
  r.config = config;
  Json& p = r.payload;
  p["n"] = n;
  p["r"] = lat.r();
  p["basis"] = {{"divisor", lat.divisor_labels()}, {"curve", lat.curve_labels()}};
  std::ostringstream t;
  t << "A(" << n << "): Picard rank " << lat.rank() << ", basis (" << join(lat.divisor_labels(), ", ") << ")\n";

  std::vector<std::vector<std::string>> rows;
  Json dj;
  const int kmax = n % 2 ? (n - 1) / 2 : (n - 2) / 2;
  for (int k = 0; k <= kmax; ++k) {
    const auto d = divisor_class_D(n, k);
    const std::string name = "D" + std::to_string(2 * k + 2);
    dj[name] = to_json(d);
    rows.push_back({name, d.to_string()});
  }
  p["D"] = dj;
  Json ej = Json::object();
  for (int i = 1; i <= lat.r(); ++i) {
    const auto e = exceptional_class(n, i);
    const std::string name = "E" + std::to_string(i);
    ej[name] = to_json(e);
    rows.push_back({name, e.to_string()});
  }
  p["E"] = ej;
  t << table(rows);

  auto classes = [](const std::vector<DivisorClass>& ds) {
    Json a = Json::array();
    for (const auto& d : ds) a.push_back(to_json(d));
    return a;
  };
  auto text_list = [](const auto& cs) {
    std::vector<std::string> s;
    for (const auto& c : cs) s.push_back(c.to_string());
    return join(s, " ");
  };
  const auto eff = eff_generators(n);
  const auto nef = nef_generators(n);
  p["eff"] = classes(eff);
  p["nef"] = classes(nef);
  t << "Eff:  " << text_list(eff) << "\n";
  t << "Nef:  " << text_list(nef) << "\n";
  if (n >= 4) {
    const auto mori = mori_generators(n);
    Json mj = Json::array();
    for (const auto& c : mori) mj.push_back(to_json(c));
    p["mori"] = mj;
    t << "Mori: " << text_list(mori) << "\n";
    const auto mov = movable_cone(n);
    Json mv = Json::array();
    for (const auto& ray : mov.rays()) mv.push_back(to_json(ray));
    p["mov"] = mv;
    t << "Mov:  " << rays_text(mov.rays()) << "\n";
  }
  Json cox = Json::array();
  std::vector<std::vector<std::string>> cox_rows{{"generator", "degree", "multiplicity"}};
  for (const auto& g : cox_generator_degrees(n)) {
    cox.push_back({{"label", g.label}, {"degree", to_json(g.degree)}, {"multiplicity", g.multiplicity}});
    cox_rows.push_back({g.label, g.degree.to_string(), std::to_string(g.multiplicity)});
  }
  p["cox"] = cox;
  p["cox_total"] = cox_generator_total(n);
  t << "Cox generators (" << cox_generator_total(n) << " in total):\n" << table(cox_rows);
  const auto k = anticanonical(n);
  p["anticanonical"] = to_json(k);
  p["anticanonical_status"] = "derived, validated at n=4,5";
  p["fano_index"] = fano_index(n);
  t << "-K = " << k.to_string() << " (derived, validated at n=4,5), Fano index " << fano_index(n) << "\n";
  r.text = t.str();
  return r;
}

Report cmd_cones(const RunConfig& config, const std::string& which) {
  require_n(config);
  const int n = config.n;
  Cone c;
  if (which == "nef") c = nef_cone(n);
  else if (which == "eff") c = eff_cone(n);
  else if (which == "mov") c = movable_cone(n);
  else if (which == "mori") c = mori_cone(n);
  else if (which == "movcurves") c = moving_curve_cone(n);
  else throw DomainError("unknown cone '" + which + "' (nef, eff, mov, mori, movcurves)");
  Report r;
  r.command = "cones";
  r.config = config;
  r.options["cone"] = which;
  r.payload = to_json(c);
  std::ostringstream t;
  t << which << "(A(" << n << ")): " << c.rays().size() << " rays\n";
  for (const auto& ray : c.rays()) t << "  " << to_string(ray) << "\n";
  t << "facets:\n";
  for (const auto& f : c.facets()) t << "  " << to_string(f) << "\n";
  r.text = t.str();
  return r;
}

namespace {

std::string chamber_table(const Decomposition& d) {
  std::vector<std::vector<std::string>> rows{{"#", "zone", "region", "forced", "rays"}};
  for (std::size_t i = 0; i < d.chambers.size(); ++i) {
    const auto& c = d.chambers[i];
    rows.push_back({std::to_string(i), zone_name(c.zone), std::to_string(c.region), label_string(c.forced),
                    rays_text(c.cone.rays())});
  }
  return table(rows);
}

}  // namespace

Report cmd_gkz(const RunConfig& config) {
  require_n(config);
  const auto d = gkz_chambers(VectorConfiguration::cox(config.n));
  Report r;
  r.command = "gkz";
  r.config = config;
  r.payload = to_json(d);
  r.payload["kind"] = decomposition_kind(config.n);
  std::ostringstream t;
  t << "A(" << config.n << "): " << d.chambers.size() << " chambers, " << d.walls.size() << " walls ("
    << decomposition_kind(config.n) << ")\n"
    << chamber_table(d);
  r.text = t.str();
  return r;
}

Report cmd_sbl(const RunConfig& config) {
  require_n(config);
  const auto d = gkz_chambers(VectorConfiguration::cox(config.n));
  Report r;
  r.command = "sbl";
  r.config = config;
  r.payload = to_json(d);
  std::ostringstream t;
  t << "A(" << config.n << "): " << d.regions.size() << " stable base locus regions from " << d.chambers.size()
    << " chambers\n";
  std::vector<std::vector<std::string>> rows{{"region", "forced", "base locus", "chambers"}};
  for (std::size_t i = 0; i < d.regions.size(); ++i) {
    std::vector<std::string> cs;
    for (auto c : d.regions[i].chambers) cs.push_back(std::to_string(c));
    rows.push_back({std::to_string(i), label_string(d.regions[i].label), geometric(d.regions[i].label), join(cs, ",")});
  }
  t << table(rows);
  if (config.n >= 4) {
    // Eff minus Mov versus the conjectured count; reported, not asserted.
    const auto c = conjecture_counts(config.n);
    Json lj = Json::array();
    for (const auto& l : c.computed_labels) lj.push_back(to_json(l));
    r.payload["conjecture"] = {{"computed", c.computed},       {"predicted", c.predicted},
                               {"divisorial", c.divisorial},   {"labels_match", c.labels_match},
                               {"labels", lj}};
    t << "outside Mov: " << c.computed << " regions (" << c.divisorial << " unions of exceptional divisors), "
      << "conjectured " << c.predicted << (c.labels_match ? ", labels match" : ", labels differ") << "\n";
  }
  r.text = t.str();
  return r;
}

Report cmd_sample(const RunConfig& config, int h) {
  require_n(config);
  const auto z = secant_sample(config.n, h, config.bound, config.seed);
  Report r;
  r.command = "sample";
  r.config = config;
  r.options["h"] = h;
  r.payload["matrix"] = to_json(z);
  r.payload["rank"] = rank(z);
  std::vector<std::vector<std::string>> rows;
  for (std::size_t i = 0; i < z.size(); ++i) {
    std::vector<std::string> row;
    for (std::size_t j = 0; j < z.size(); ++j) row.push_back(to_string(z.at(i, j)));
    rows.push_back(row);
  }
  std::ostringstream t;
  t << "point of sec_" << h << "(G(1," << config.n << ")), rank " << rank(z) << ", seed " << config.seed << "\n"
    << table(rows);
  r.text = t.str();
  return r;
}

Report cmd_blowup(const RunConfig& config) {
  require_n(config);
  const auto d = blowup_one_decomposition(config.n);
  Report r;
  r.command = "blowup";
  r.config = config;
  r.payload = to_json(d);
  std::ostringstream t;
  t << "A(" << config.n << ")_1: " << d.chambers.size() << " chambers (Mori chamber = stable base locus)\n"
    << chamber_table(d);
  r.text = t.str();
  return r;
}

Report cmd_verify(const RunConfig& config) {
  Report r;
  r.command = "verify";
  r.config = config;
  r.checks = run_verify(config);
  Json checks = Json::array();
  std::size_t passed = 0;
  std::vector<std::vector<std::string>> rows;
  for (const auto& c : r.checks) {
    checks.push_back({{"suite", c.suite}, {"name", c.name}, {"claim", c.claim}, {"pass", c.pass}, {"detail", c.detail}});
    passed += c.pass;
    rows.push_back({c.pass ? "PASS" : "FAIL", c.suite, c.name, c.detail});
  }
  r.payload["checks"] = checks;
  r.payload["passed"] = passed;
  r.payload["failed"] = r.checks.size() - passed;
  std::ostringstream t;
  t << table(rows) << passed << "/" << r.checks.size() << " checks passed\n";
  r.text = t.str();
  return r;
}

}  // namespace skewmori::cli
