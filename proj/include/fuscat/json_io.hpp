#pragma once

#include <string>

#include <json.hpp>

#include "fuscat/cyc.hpp"
#include "fuscat/fusion.hpp"
#include "fuscat/modular.hpp"
#include "fuscat/tambara.hpp"

namespace fuscat {

using Json = nlohmann::ordered_json;

/// {"conductor": N, "coeffs": [[num, den], ...]}, coeffs over zeta_N^0..zeta_N^(N-1).
Json cyc_to_json(const Cyc& c);
/// Accepts the object form (any conductor, not necessarily canonical) or a
/// display string such as "z16^5".
Cyc cyc_from_json(const Json& j);

/// {"labels", "unit", "dual", "N": [[x, y, z, n], ...], "fpdim"}.
Json ring_to_json(const FusionRing& r);
FusionRing ring_from_json(const Json& j);

/// Ring JSON plus "theta" and, optionally, "S".
Json premodular_to_json(const Premodular& p);
/// S is derived by balancing when absent.
Premodular premodular_from_json(const Json& j);

/// {"n", "k", "tau_sign", "q": [q(g_1), ..., q(g_n)], "alpha_sign"}; q may
/// also list all 2^n values.
Json braiding_to_json(const BraidingData& b);
BraidingData braiding_from_json(const Json& j);

Json modular_report_to_json(const ModularReport& r);
Json validation_to_json(const ValidationReport& r);

/// Reads a JSON file; throws std::runtime_error("cannot open ...") when missing.
Json read_json_file(const std::string& path);

}  // namespace fuscat
