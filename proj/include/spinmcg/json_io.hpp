#pragma once

// JSON views of the library results, used by the command line tool.

#include <json.hpp>

#include "spinmcg/certify.hpp"
#include "spinmcg/genus2.hpp"
#include "spinmcg/rokhlin.hpp"
#include "spinmcg/spin_membership.hpp"

namespace spinmcg {

nlohmann::json to_json(const SymplecticMatrix& m);
nlohmann::json to_json(const SymplecticMatrixF2& m);
nlohmann::json to_json(const MembershipReport& r);
nlohmann::json to_json(const GenerationCertificate& c);
nlohmann::json to_json(const KnottedSurfaceData& s);

namespace genus2 {
nlohmann::json to_json(const CosetGraph& g);
nlohmann::json to_json(const std::vector<TableEntry>& table);
}  // namespace genus2

}  // namespace spinmcg
