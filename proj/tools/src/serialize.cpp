#include "skewmori/cli/serialize.hpp"

#include <limits>
#include <string>

#include "skewmori/errors.hpp"

namespace skewmori::cli {

Json to_json(const mpz_class& x) {
  if (mpz_fits_slong_p(x.get_mpz_t())) return Json(static_cast<std::int64_t>(x.get_si()));
  return Json(x.get_str());
}

Json to_json(const mpq_class& x) {
  if (x.get_den() == 1) return to_json(mpz_class(x.get_num()));
  return Json(x.get_str());
}

Json to_json(const IntVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

Json to_json(const ExactVector& v) {
  Json a = Json::array();
  for (const auto& x : v) a.push_back(to_json(x));
  return a;
}

mpz_class integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return mpz_class(std::to_string(j.get<std::uint64_t>()));
    return mpz_class(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return mpz_class(j.get<std::string>());
  throw DomainError("expected an integer in JSON");
}

mpq_class rational_from_json(const Json& j) {
  if (j.is_string()) {
    mpq_class q(j.get<std::string>());
    q.canonicalize();
    return q;
  }
  return mpq_class(integer_from_json(j));
}

IntVector int_vector_from_json(const Json& j) {
  IntVector v;
  for (const auto& x : j) v.push_back(integer_from_json(x));
  return v;
}

namespace {

Json vectors(const std::vector<IntVector>& vs) {
  Json a = Json::array();
  for (const auto& v : vs) a.push_back(to_json(v));
  return a;
}

std::vector<ExactVector> exact_vectors(const Json& j) {
  std::vector<ExactVector> out;
  for (const auto& v : j) out.push_back(to_exact(int_vector_from_json(v)));
  return out;
}

}  // namespace

Json to_json(const Cone& c) {
  Json j;
  j["rank"] = c.ambient_rank();
  j["rays"] = vectors(c.rays());
  j["facets"] = vectors(c.facets());
  if (!c.lineality().empty()) j["lineality"] = vectors(c.lineality());
  if (!c.equations().empty()) j["equations"] = vectors(c.equations());
  return j;
}

Cone cone_from_json(const Json& j) {
  const auto rank = j.at("rank").get<std::size_t>();
  auto gens = exact_vectors(j.at("rays"));
  if (j.contains("lineality")) {
    for (auto v : exact_vectors(j["lineality"])) {
      gens.push_back(v);
      for (auto& x : v) x = -x;
      gens.push_back(v);
    }
  }
  return Cone::from_generators(rank, gens);
}

Json to_json(const Polynomial& p) {
  Json j;
  Json vars = Json::array();
  for (std::size_t v = 0; v < p.num_vars(); ++v) vars.push_back(variable_name(p.n(), v));
  j["vars"] = vars;
  Json terms = Json::array();
  // Same order as the text rendering: decreasing lexicographic exponents.
  for (auto it = p.terms().rbegin(); it != p.terms().rend(); ++it) {
    Json t;
    t["exp"] = it->first;
    t["coef"] = to_json(it->second);
    terms.push_back(t);
  }
  j["terms"] = terms;
  return j;
}

Polynomial polynomial_from_json(const Json& j) {
  const std::size_t count = j.at("vars").size();
  int n = 1;
  while (variable_count(n) < count) ++n;
  if (variable_count(n) != count) throw DomainError("polynomial JSON: variable count is not triangular");
  Polynomial p(n);
  for (const auto& t : j.at("terms")) {
    auto e = t.at("exp").get<Exponent>();
    if (e.size() != count) throw DimensionError("polynomial JSON: exponent has the wrong length");
    p.add_term(e, integer_from_json(t.at("coef")));
  }
  return p;
}

Json to_json(const RationalSkewMatrix& z) {
  Json j;
  j["size"] = z.size();
  Json rows = Json::array();
  for (std::size_t i = 0; i + 1 < z.size(); ++i) {
    Json row = Json::array();
    for (std::size_t k = i + 1; k < z.size(); ++k) row.push_back(to_json(z.at(i, k)));
    rows.push_back(row);
  }
  j["upper"] = rows;
  return j;
}

RationalSkewMatrix skew_from_json(const Json& j) {
  const auto size = j.at("size").get<std::size_t>();
  RationalSkewMatrix z(size);
  const auto& rows = j.at("upper");
  if (rows.size() != (size ? size - 1 : 0)) throw DimensionError("skew JSON: wrong number of rows");
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != size - i - 1) throw DimensionError("skew JSON: wrong row length");
    for (std::size_t k = 0; k < rows[i].size(); ++k) z.set(i, i + 1 + k, rational_from_json(rows[i][k]));
  }
  return z;
}

Json to_json(const DivisorClass& d) { return Json(d.coeffs); }
Json to_json(const CurveClass& c) { return Json(c.coeffs); }

Json to_json(const ForcedLabel& label) { return Json(label_strings(label)); }

ForcedLabel label_from_json(const Json& j) {
  ForcedLabel out;
  for (const auto& s : j) {
    std::vector<std::string> set;
    std::string cur;
    for (char ch : s.get<std::string>()) {
      if (ch == '&') {
        set.push_back(cur);
        cur.clear();
      } else {
        cur += ch;
      }
    }
    set.push_back(cur);
    out.push_back(std::move(set));
  }
  return out;
}

namespace {

Zone zone_from_name(const std::string& s) {
  if (s == "nef") return Zone::Nef;
  if (s == "movable") return Zone::Movable;
  if (s == "effective") return Zone::Effective;
  return Zone::None;
}

}  // namespace

Json to_json(const Decomposition& d) {
  Json j;
  j["n"] = d.n;
  j["rank"] = d.rank;
  Json chambers = Json::array();
  for (const auto& c : d.chambers) {
    Json cj;
    cj["rays"] = vectors(c.cone.rays());
    cj["forced"] = to_json(c.forced);
    cj["region"] = c.region;
    cj["zone"] = zone_name(c.zone);
    chambers.push_back(cj);
  }
  j["chambers"] = chambers;
  Json regions = Json::array();
  for (const auto& r : d.regions) {
    Json rj;
    rj["forced"] = to_json(r.label);
    rj["chambers"] = r.chambers;
    regions.push_back(rj);
  }
  j["regions"] = regions;
  Json walls = Json::array();
  for (const auto& w : d.walls) {
    Json wj;
    wj["chambers"] = {w.first, w.second};
    wj["rays"] = vectors(w.cone.rays());
    walls.push_back(wj);
  }
  j["walls"] = walls;
  return j;
}

Decomposition decomposition_from_json(const Json& j) {
  Decomposition d;
  d.n = j.at("n").get<int>();
  d.rank = j.at("rank").get<std::size_t>();
  for (const auto& cj : j.at("chambers")) {
    GKZChamber c;
    c.cone = Cone::from_generators(d.rank, exact_vectors(cj.at("rays")));
    c.maximal = c.cone.is_full_dimensional();
    c.representative = c.cone.interior_point();
    c.forced = label_from_json(cj.at("forced"));
    c.region = cj.at("region").get<std::size_t>();
    c.zone = zone_from_name(cj.at("zone").get<std::string>());
    d.chambers.push_back(std::move(c));
  }
  for (const auto& rj : j.at("regions")) {
    d.regions.push_back({label_from_json(rj.at("forced")), rj.at("chambers").get<std::vector<std::size_t>>()});
  }
  for (const auto& wj : j.at("walls")) {
    const auto pair = wj.at("chambers").get<std::vector<std::size_t>>();
    if (pair.size() != 2) throw DomainError("decomposition JSON: a wall joins two chambers");
    d.walls.push_back({pair[0], pair[1], Cone::from_generators(d.rank, exact_vectors(wj.at("rays")))});
  }
  return d;
}

}  // namespace skewmori::cli
