#include "seminormal/json_io.hpp"

namespace seminormal {

namespace {

Json poly_terms_to_json(const Poly& p) {
  Json arr = Json::array();
  for (int k = 0; k <= p.degree(); ++k)
    if (p.coeffs[k] != 0) arr.push_back(Json::array({k, p.coeffs[k].get_str()}));
  return arr;
}

Poly poly_terms_from_json(const Json& arr) {
  Poly p;
  for (const auto& term : arr) {
    int exp = term.at(0).get<int>();
    Int c(term.at(1).get<std::string>());
    if (exp >= static_cast<int>(p.coeffs.size())) p.coeffs.resize(exp + 1, Int(0));
    p.coeffs[exp] = c;
  }
  p.trim();
  return p;
}

}  // namespace

Json ratfunc_to_json(const RatFunc& f) {
  return Json{{"shift", f.shift()}, {"num", poly_terms_to_json(f.num())},
              {"den", poly_terms_to_json(f.den())}};
}

RatFunc ratfunc_from_json(const Json& j) {
  return RatFunc(j.at("shift").get<long>(), poly_terms_from_json(j.at("num")),
                 poly_terms_from_json(j.at("den")));
}

Json partition_to_json(const Partition& p) { return Json(p.parts); }

Json tableau_to_json(const Tableau& t) {
  Json arr = Json::array();
  for (const auto& row : t.rows) arr.push_back(Json(row));
  return arr;
}

Tableau tableau_from_json(const Json& j) {
  std::vector<std::vector<int>> rows;
  std::vector<int> parts;
  for (const auto& row : j) {
    rows.push_back(row.get<std::vector<int>>());
    parts.push_back(static_cast<int>(rows.back().size()));
  }
  return Tableau(Partition(parts), std::move(rows));
}

Json hecke_to_json(const HeckeElement& h) {
  Json arr = Json::array();
  for (const auto& [w, c] : h.terms)
    arr.push_back(Json{{"perm", Json(w.img)}, {"coeff", ratfunc_to_json(c)}});
  return arr;
}

Json certificate_to_json(const DenominatorCertificate& cert) {
  Json predicted = Json::array();
  for (const auto& [d, m] : cert.predicted.factors)
    predicted.push_back(Json::array({d, m}));
  Json dens = Json::array();
  for (const auto& entry : cert.denominators) {
    Json factors = Json::array();
    for (const auto& [d, m] : entry.factorization.factorization.factors)
      factors.push_back(Json::array({d, m}));
    dens.push_back(Json{{"tableau", tableau_to_json(entry.index)},
                        {"cyclotomic", entry.factorization.is_cyclotomic_product},
                        {"factors", factors}});
  }
  return Json{{"predicted_radials", Json(cert.predicted_radials)},
              {"predicted_factors", predicted},
              {"denominators", dens},
              {"all_cyclotomic", cert.all_cyclotomic},
              {"all_divide_predicted", cert.all_divide_predicted},
              {"clears_after_multiplying", cert.clears_after_multiplying}};
}

Json expansion_to_json(const ExpansionDocument& doc) {
  Json terms = Json::array();
  for (const auto& [t, c] : doc.vector.terms)
    terms.push_back(Json{{"tableau", tableau_to_json(t)}, {"coeff", ratfunc_to_json(c)}});
  Json j{{"shape", partition_to_json(doc.shape)},
         {"tableau", tableau_to_json(doc.tableau)},
         {"method", doc.method},
         {"terms", terms},
         {"denominators", certificate_to_json(doc.certificate)},
         {"term_count_trace", Json(doc.term_count_trace)}};
  if (!doc.p_factors.empty()) {
    Json factors = Json::array();
    for (const auto& f : doc.p_factors) factors.push_back(hecke_to_json(f));
    j["p_factors"] = factors;
  }
  return j;
}

ExpansionDocument expansion_from_json(const Json& j) {
  ExpansionDocument doc;
  std::vector<int> parts = j.at("shape").get<std::vector<int>>();
  doc.shape = Partition(parts);
  doc.tableau = tableau_from_json(j.at("tableau"));
  doc.method = j.at("method").get<std::string>();
  doc.vector = SpechtVector(doc.shape);
  for (const auto& term : j.at("terms"))
    doc.vector.add_term(tableau_from_json(term.at("tableau")),
                        ratfunc_from_json(term.at("coeff")));
  doc.term_count_trace = j.at("term_count_trace").get<std::vector<long long>>();
  return doc;
}

Json base_change_to_json(const BaseChange& bc) {
  Json order = Json::array();
  for (const auto& t : bc.order) order.push_back(tableau_to_json(t));
  auto matrix = [](const std::vector<std::vector<RatFunc>>& m) {
    Json rows = Json::array();
    for (const auto& row : m) {
      Json r = Json::array();
      for (const auto& c : row) r.push_back(ratfunc_to_json(c));
      rows.push_back(std::move(r));
    }
    return rows;
  };
  Json gammas = Json::array();
  for (const auto& g : bc.gammas) gammas.push_back(ratfunc_to_json(g));
  return Json{{"shape", partition_to_json(bc.shape)},
              {"order", order},
              {"M", matrix(bc.m)},
              {"Minv", matrix(bc.minv)},
              {"gammas", gammas}};
}

Json gram_to_json(const Partition& shape, const std::vector<Tableau>& order,
                  const std::vector<std::vector<RatFunc>>& gram) {
  Json order_json = Json::array();
  for (const auto& t : order) order_json.push_back(tableau_to_json(t));
  Json rows = Json::array();
  for (const auto& row : gram) {
    Json r = Json::array();
    for (const auto& c : row) r.push_back(ratfunc_to_json(c));
    rows.push_back(std::move(r));
  }
  return Json{{"shape", partition_to_json(shape)}, {"order", order_json}, {"gram", rows}};
}

Json submodule_report_to_json(const SubmoduleReport& rep) {
  Json hyp = Json::array();
  for (size_t i = 0; i < rep.radials.size(); ++i)
    hyp.push_back(Json{{"radial", rep.radials[i]},
                       {"nonzero_at_zeta", static_cast<bool>(rep.hypothesis[i])}});
  return Json{{"shape", partition_to_json(rep.shape)},
              {"node", Json::array({rep.node.row, rep.node.col})},
              {"e", rep.e},
              {"hypothesis", hyp},
              {"pole_free", rep.pole_free},
              {"generators_checked", rep.generators_checked},
              {"verdict", rep.verdict}};
}

}  // namespace seminormal
