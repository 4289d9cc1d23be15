#include "liecert/walg.hpp"

#include <fstream>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace liecert {

namespace {

Rat dot(const Vec& a, const Vec& b) {
  Rat s(0);
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat parse_rational(const nlohmann::json& j) {
  if (j.is_number_integer()) return Rat(j.get<long>());
  std::string s = j.get<std::string>();
  auto slash = s.find('/');
  if (slash == std::string::npos) return Rat(Int(s));
  return Rat(Int(s.substr(0, slash))) / Rat(Int(s.substr(slash + 1)));
}

}  // namespace

CentralChargeExpansion central_charge_expansion(const LieAlgebra& g,
                                                const Sl2Triple& t) {
  CentralChargeExpansion e;
  int g0 = t.grading.count(0) ? static_cast<int>(t.grading.at(0).size()) : 0;
  int g1 = t.grading.count(1) ? static_cast<int>(t.grading.at(1).size()) : 0;
  e.constant = Rat(g0) - Rat(g1, 2);
  Vec rho = g.datum->rho();
  e.inv_coeff = Rat(-12) * g.datum->inner(rho, rho);
  e.mid = Rat(12) * dot(rho, g.cartan_coords(t.h));
  e.lin_coeff = Rat(-3) * g.form(t.h, t.h);
  return e;
}

Rat central_charge(const WParams& p) {
  Rat u = Rat(p.k + p.g->dual_coxeter);
  if (u == 0) throw std::invalid_argument("central_charge: critical level");
  auto e = central_charge_expansion(*p.g, p.triple);
  return Rat(e.constant + e.inv_coeff / u + e.mid + e.lin_coeff * u);
}

AlgebraNumerics algebra_numerics(char type, int rank) {
  switch (type) {
    case 'A':
      if (rank < 1) throw std::invalid_argument("algebra_numerics: rank");
      return AlgebraNumerics{rank + 1, rank + 1, 1};
    case 'D':
      if (rank < 3) throw std::invalid_argument("algebra_numerics: rank");
      return AlgebraNumerics{2 * rank - 2, 2 * rank - 2, 1};
    case 'G':
      if (rank != 2) throw std::invalid_argument("algebra_numerics: rank");
      return AlgebraNumerics{4, 6, 3};
    default:
      throw std::invalid_argument("algebra_numerics: unsupported type");
  }
}

std::optional<Int> is_admissible(char type, int rank, const Rat& k) {
  auto num = algebra_numerics(type, rank);
  Rat u = Rat(k + num.dual_coxeter);
  if (u <= 0) return std::nullopt;
  Int p = numerator(u), q = denominator(u);  // lowest terms, q >= 1
  bool coprime = gcd(q, Int(num.lacing)) == 1;
  Int bound = coprime ? Int(num.dual_coxeter) : Int(num.coxeter);
  if (!coprime && q % num.lacing != 0) return std::nullopt;
  if (p < bound) return std::nullopt;
  return q;
}

NaturalLevelTable load_natural_levels(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("load_natural_levels: cannot open " + path);
  nlohmann::json j;
  in >> j;
  NaturalLevelTable table;
  for (const auto& row : j) {
    NaturalLevelRow r;
    std::string type = row.at("g_type").get<std::string>();
    if (type.size() != 1) throw std::runtime_error("load_natural_levels: g_type");
    r.g_type = type[0];
    r.rank = std::stoi(row.at("rank_spec").get<std::string>());
    r.component_index = row.at("component_index").get<int>();
    r.a = parse_rational(row.at("a"));
    r.b = parse_rational(row.at("b"));
    r.source_note = row.at("source_note").get<std::string>();
    table.push_back(std::move(r));
  }
  return table;
}

bool minimal_lisse(char type, int rank, const Rat& k, const NaturalLevelTable& table) {
  if (type == 'A')
    throw std::invalid_argument("minimal_lisse: type A is outside the criterion");
  bool found = false;
  bool ok = true;
  for (const auto& r : table) {
    if (r.g_type != type || r.rank != rank || r.component_index < 1) continue;
    found = true;
    Rat v = Rat(r.a * k + r.b);
    if (denominator(v) != 1 || v < 0) ok = false;
  }
  if (!found) throw std::runtime_error("minimal_lisse: no table rows for algebra");
  return ok;
}

}  // namespace liecert
