// JSON forms of the public values; coefficients are decimal strings and
// exponents ascending, so emitted output round-trips byte-identically.
#pragma once

#include <json.hpp>

#include "seminormal/modular.hpp"

namespace seminormal {

using Json = nlohmann::json;

Json ratfunc_to_json(const RatFunc& f);
RatFunc ratfunc_from_json(const Json& j);

Json partition_to_json(const Partition& p);
Json tableau_to_json(const Tableau& t);
Tableau tableau_from_json(const Json& j);

Json hecke_to_json(const HeckeElement& h);

struct ExpansionDocument {
  Partition shape;
  Tableau tableau;
  std::string method;
  SpechtVector vector;
  DenominatorCertificate certificate;
  std::vector<long long> term_count_trace;
  std::vector<HeckeElement> p_factors;  // fast method only
};

Json expansion_to_json(const ExpansionDocument& doc);
// Parses the parts needed for the round-trip check.
ExpansionDocument expansion_from_json(const Json& j);

Json base_change_to_json(const BaseChange& bc);
Json gram_to_json(const Partition& shape, const std::vector<Tableau>& order,
                  const std::vector<std::vector<RatFunc>>& gram);
Json submodule_report_to_json(const SubmoduleReport& rep);
Json certificate_to_json(const DenominatorCertificate& cert);

}  // namespace seminormal
