#pragma once

#include <string>

#include "qsslab/access.hpp"
#include "qsslab/entropy.hpp"
#include "qsslab/verifier.hpp"

namespace qss {

// Machine-readable report forms. Values are emitted at full binary
// precision; parsing and re-emitting an emitted report is byte-identical.
std::string verification_report_json(const VerificationReport& report);
std::string classification_json(const AccessStructure& gamma, const StructureFlags& flags,
                                const std::vector<SubsetPair>& pairs);
std::string recovery_json(const RecoveryMap& map);
std::string rates_json(const RatesReport& report);

}  // namespace qss
