#pragma once

#include <json.hpp>

#include "prodex/congruence.hpp"
#include "prodex/series.hpp"

namespace prodex {

// Big integers are written as decimal strings. Sequence arrays are 1-based in meaning:
// "exponents"[0] is m_1 and "values"[0] is L_1; "coeffs"[0] is c_0.

nlohmann::json to_json(const TruncatedSeries &f);            // {"order", "coeffs"}
nlohmann::json to_json(const ProductExpansion &m);           // {"order", "exponents"}
nlohmann::json to_json(const GhostSequence &ghost);          // {"order", "values"}
nlohmann::json to_json(const FermatWitness &w);
nlohmann::json to_json(const WieferichScanReport &report);   // {"lo", "hi", "primes_tested", "hits"}
nlohmann::json to_json(const PartitionTable &table);         // {"order", "values"}

// Readers throw std::invalid_argument on a missing key, a non-decimal entry,
// or an "order" that disagrees with the array length.
TruncatedSeries series_from_json(const nlohmann::json &j);
ProductExpansion expansion_from_json(const nlohmann::json &j);
GhostSequence ghost_from_json(const nlohmann::json &j);
WieferichScanReport scan_report_from_json(const nlohmann::json &j);

} // namespace prodex
