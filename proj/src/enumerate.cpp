#include "echcap/enumerate.hpp"

#include <algorithm>

#include "path_search.hpp"

namespace ech {

std::vector<ConvexGenerator> generators_with_index_up_to(std::int64_t max_index,
                                                         std::uint64_t node_budget) {
    detail::BudgetCounter budget{node_budget};
    std::vector<ConvexGenerator> out;
    detail::EnumOptions options;
    options.max_index = max_index;
    options.allow_h = true;
    options.budget = &budget;
    detail::enumerate_paths(options, [&](const detail::PathState& state) {
        out.push_back(ConvexGenerator::make(state.edges, false));
    });
    std::sort(out.begin(), out.end(), [](const ConvexGenerator& l, const ConvexGenerator& r) {
        if (l.ech_index() != r.ech_index()) return l.ech_index() < r.ech_index();
        return l.str() < r.str();
    });
    return out;
}

std::vector<ConvexGenerator> generators_with_action_up_to(const ToricDomain& domain,
                                                          const Rational& cap, bool allow_h,
                                                          std::uint64_t node_budget) {
    detail::BudgetCounter budget{node_budget};
    detail::SearchGeometry geometry(domain);
    std::vector<std::pair<Rational, ConvexGenerator>> keyed;
    detail::EnumOptions options;
    options.geometry = &geometry;
    options.action_cap = cap;
    options.allow_h = allow_h;
    options.budget = &budget;
    detail::enumerate_paths(options, [&](const detail::PathState& state) {
        keyed.emplace_back(state.action, ConvexGenerator::make(state.edges, false));
    });
    std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first < r.first;
        return l.second.str() < r.second.str();
    });
    std::vector<ConvexGenerator> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
}

}  // namespace ech
