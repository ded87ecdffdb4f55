#pragma once

#include <json.hpp>

#include "echcap/bounds.hpp"
#include "echcap/obstruct.hpp"

namespace ech {

using Json = nlohmann::ordered_json;

/// Structured certificate document: schema, domain, target, the queried
/// generator, lambda, n, and the pair list in formal-product syntax.
Json certificate_to_json(const Certificate& cert);
Certificate certificate_from_json(const Json& doc);

Json verdict_to_json(const Verdict& verdict, const ToricDomain& domain,
                     const ToricDomain& target);

Json threshold_to_json(const ThresholdResult& result);

}  // namespace ech
