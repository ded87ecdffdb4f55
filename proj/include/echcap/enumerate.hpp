#pragma once

#include <cstdint>
#include <vector>

#include "echcap/domain.hpp"
#include "echcap/generator.hpp"
#include "echcap/rational.hpp"

namespace ech {

/// Every convex generator with ECH index <= max_index (a finite set),
/// sorted by (index, canonical text). Includes the empty generator.
std::vector<ConvexGenerator> generators_with_index_up_to(std::int64_t max_index,
                                                         std::uint64_t node_budget = 1'000'000);

/// Every convex generator with action <= cap under the domain, optionally
/// including h labels. Finite because every edge costs positive action.
/// Sorted by (action, canonical text); includes the empty generator.
std::vector<ConvexGenerator> generators_with_action_up_to(const ToricDomain& domain,
                                                          const Rational& cap, bool allow_h,
                                                          std::uint64_t node_budget = 1'000'000);

}  // namespace ech
