#include "ffsqfree/report_io.hpp"

#include "ffsqfree/parse.hpp"

namespace ffsqfree {

using nlohmann::json;

namespace {

json rational_json(const Rational& r) {
  return json{{"num", boost::multiprecision::numerator(r).str()},
              {"den", boost::multiprecision::denominator(r).str()},
              {"approx", static_cast<double>(r)}};
}

std::string csv_quote(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

json to_json(const MultiPoly& p) {
  json terms = json::array();
  for (const auto& [exps, c] : p.terms()) terms.push_back({{"exponents", exps}, {"coeff", p.field().format(c)}});
  return terms;
}

json to_json(const CensusReport& r) {
  json j{{"f", r.f},
         {"q", r.q},
         {"n", r.n},
         {"mode", to_string(r.mode)},
         {"total", r.total},
         {"squarefree", r.squarefree},
         {"density", rational_json(r.density)},
         {"constant_in_x", r.constant_in_x}};
  j["bound_D"] = r.bound_D ? json(*r.bound_D) : json(nullptr);
  j["bound_check"] = r.bound_check ? json(*r.bound_check) : json(nullptr);
  if (r.mode == CensusMode::Sample) {
    j["seed"] = *r.seed;
    j["sample_count"] = *r.sample_count;
    j["half_width_95"] = *r.half_width;
  }
  return j;
}

json to_json(const RamsayReport& r) {
  json factors = json::array();
  for (const auto& lf : r.local_factors)
    factors.push_back({{"P", format(lf.prime)}, {"rho_P2", lf.rho}, {"factor", rational_json(lf.factor)}});
  json empirical = json::array();
  for (const auto& e : r.empirical)
    empirical.push_back(
        {{"n", e.n}, {"density", rational_json(e.density)}, {"deviation", rational_json(e.deviation)}});
  return json{{"f", r.f},
              {"q", r.q},
              {"B", r.B},
              {"local_factors", std::move(factors)},
              {"c_f_truncated", rational_json(r.c_f_truncated)},
              {"tail_bound", rational_json(r.tail_bound)},
              {"tail_derivation", r.tail_derivation},
              {"empirical", std::move(empirical)},
              {"hypotheses", {{"separable", r.separable},
                              {"content_squarefree", r.content_squarefree},
                              {"irreducibility_checked", r.irreducibility_checked}}}};
}

json to_json(const HypersurfaceCertificate& c, const Field& field) {
  json j{{"f", c.f},
         {"p", field.p()},
         {"k", field.k()},
         {"q", c.q},
         {"n", c.n},
         {"disc_part", to_json(c.disc_part)},
         {"res_part", to_json(c.res_part)},
         {"formal_degree", c.formal_degree},
         {"lc_normalized", c.lc_normalized},
         {"product_degree", c.product_degree},
         {"bound", c.bound},
         {"nontrivial", c.nontrivial},
         {"within_bound", c.within_bound},
         {"schmidt_bound", c.schmidt_bound}};
  j["zero_count"] = c.zero_count ? json(*c.zero_count) : json(nullptr);
  j["schmidt_ok"] = c.schmidt_ok ? json(*c.schmidt_ok) : json(nullptr);
  return j;
}

json to_json(const EquivalenceReport& r) {
  return json{{"total", r.total},
              {"bad_direct_count", r.bad_direct.size()},
              {"bad_hypersurface_count", r.bad_hypersurface.size()},
              {"degree_drop_count", r.degree_drop_points.size()},
              {"disagreements", r.disagreements},
              {"exact_required", r.exact_required},
              {"agreement", r.agreement},
              {"ok", r.ok}};
}

std::string csv_header() { return "f,q,n,mode,total,squarefree,density_num,density_den,bound_D,check"; }

std::string csv_row(const CensusReport& r) {
  std::string row = csv_quote(r.f);
  row += "," + std::to_string(r.q);
  row += "," + std::to_string(r.n);
  row += "," + to_string(r.mode);
  row += "," + std::to_string(r.total);
  row += "," + std::to_string(r.squarefree);
  row += "," + boost::multiprecision::numerator(r.density).str();
  row += "," + boost::multiprecision::denominator(r.density).str();
  row += "," + (r.bound_D ? std::to_string(*r.bound_D) : std::string());
  row += "," + (r.bound_check ? std::string(*r.bound_check ? "pass" : "fail") : std::string());
  return row;
}

}  // namespace ffsqfree
