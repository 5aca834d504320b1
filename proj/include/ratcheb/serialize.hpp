#pragma once

#include <string>
#include <vector>

#include <json.hpp>

#include "ratcheb/domains.hpp"
#include "ratcheb/harness.hpp"
#include "ratcheb/minimax.hpp"
#include "ratcheb/newton_pade.hpp"
#include "ratcheb/numkernel.hpp"
#include "ratcheb/pade.hpp"

namespace ratcheb {

using json = nlohmann::json;

/// A real value (imaginary part exactly zero) becomes a JSON number,
/// anything else a [re, im] pair.
json to_json(cplx z);
json to_json(const std::vector<cplx>& zs);
json to_json(const RationalFunction& r);
json to_json(const PadeResult& p);
json to_json(const InterpolationResult& r);
json to_json(const ChebSystem& c);
json to_json(const MinimaxResult& r);
json to_json(const SweepRecord& rec);

cplx cplx_from_json(const json& j);
std::vector<cplx> cplx_list_from_json(const json& j);
/// Inverse of to_json(RationalFunction): {"m", "n", "num", "den"}.
RationalFunction rational_from_json(const json& j);

/// "interval:a,b", "segment:ar,ai,br,bi", "disk:R" or "samples:<file.json>"
/// where the file holds a list of points (numbers or [re, im] pairs), either
/// bare or under "points". Throws Errc::InvalidArgument on malformed input.
DomainSpec parse_domain(const std::string& text);

/// 17 significant digits; "inf", "-inf" and "nan" for non-finite values.
std::string format_number(double x);

/// Header eps,uniform_error,predicted,ratio,node_distance,pointwise_residual,winding,converged.
std::string sweep_csv(const SweepResult& sweep);

/// Pretty-printed JSON with a trailing newline.
std::string dump(const json& j);

}  // namespace ratcheb
