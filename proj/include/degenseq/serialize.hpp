#pragma once

#include "degenseq/degenerate.hpp"
#include "degenseq/identities.hpp"

#include <json.hpp>

#include <functional>
#include <string>

namespace degenseq {

// Term list sorted lexicographically by (dl, dx); big integers as decimal
// strings so the wire format never overflows 64 bits.
nlohmann::json poly_to_json(const BivarPoly& p);
BivarPoly poly_from_json(const nlohmann::json& j);

nlohmann::json table_to_json(const DegenSequenceTable& t);
DegenSequenceTable table_from_json(const nlohmann::json& j);

nlohmann::json report_to_json(const VerificationReport& r);
nlohmann::json reports_to_json(const std::vector<VerificationReport>& rs);

std::string family_name(SequenceFamily f);

// CSV with header row, LF line endings.
std::string table_to_csv(const DegenSequenceTable& t);
std::string triangle_to_csv(const std::string& corner, unsigned n_max,
                            const std::function<BigInt(unsigned, unsigned)>& entry);

} // namespace degenseq
