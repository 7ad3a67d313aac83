#pragma once

#include <string>

#include <nlohmann/json.hpp>

#include "ffsqfree/census.hpp"
#include "ffsqfree/hypersurface.hpp"

namespace ffsqfree {

nlohmann::json to_json(const MultiPoly& p);
nlohmann::json to_json(const CensusReport& report);
nlohmann::json to_json(const RamsayReport& report);
nlohmann::json to_json(const HypersurfaceCertificate& cert, const Field& field);
nlohmann::json to_json(const EquivalenceReport& report);

/// f,q,n,mode,total,squarefree,density_num,density_den,bound_D,check
std::string csv_header();
std::string csv_row(const CensusReport& report);

}  // namespace ffsqfree
