#pragma once

// Internal depth-first enumeration over convex lattice paths in canonical
// edge order (strictly increasing steepness). Appending an edge strictly
// increases the ECH index and, under a domain, the action, so every mode
// below prunes monotonically.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <vector>

#include "echcap/domain.hpp"
#include "echcap/errors.hpp"
#include "echcap/generator.hpp"
#include "echcap/rational.hpp"

namespace ech::detail {

struct BudgetCounter {
    std::uint64_t remaining = 0;

    void spend() {
        if (remaining == 0) {
            throw BudgetExceededError("search node budget exhausted");
        }
        --remaining;
    }
};

/// Per-search geometry: the inscribed-rectangle bounds and a support memo.
/// Any path satisfies action >= rect_h * x + rect_w * y.
class SearchGeometry {
public:
    explicit SearchGeometry(const ToricDomain& domain) : domain_(&domain) {
        auto [w, h] = domain.inscribed_rectangle();
        rect_w_ = w;
        rect_h_ = h;
        min_side_ = rect_w_ < rect_h_ ? rect_w_ : rect_h_;
    }

    const ToricDomain& domain() const { return *domain_; }
    const Rational& rect_w() const { return rect_w_; }
    const Rational& rect_h() const { return rect_h_; }
    const Rational& min_side() const { return min_side_; }

    /// Action cost of one multiplicity step in a direction: support(b, a).
    const Rational& unit_cost(const Direction& d) {
        auto it = memo_.find({d.a, d.b});
        if (it == memo_.end()) {
            it = memo_.emplace(std::pair{d.a, d.b},
                               domain_->support(Rational(d.b), Rational(d.a)))
                     .first;
        }
        return it->second;
    }

private:
    const ToricDomain* domain_;
    Rational rect_w_, rect_h_, min_side_;
    std::map<std::pair<std::int64_t, std::int64_t>, Rational> memo_;
};

struct PathState {
    std::vector<LabeledEdge> edges;
    std::int64_t x = 0;
    std::int64_t y = 0;
    std::int64_t lattice = 1;
    std::int64_t h = 0;
    Rational action{0};

    std::int64_t ech_index() const { return 2 * (lattice - 1) - h; }

    ConvexGenerator generator() const { return ConvexGenerator::make(edges, false); }
};

struct EnumOptions {
    SearchGeometry* geometry = nullptr;          // required when action_cap is set
    std::optional<Rational> action_cap;          // inclusive
    std::optional<std::int64_t> exact_index;     // stop extending at this index
    std::optional<std::int64_t> max_index;       // prune children beyond this
    bool allow_h = false;                        // enumerate h labels (plain generators)
    std::optional<std::int64_t> min_doubled_xy_minus_h;  // feasibility prune for 2(x+y)-h
    BudgetCounter* budget = nullptr;             // required
};

/// Visits every path state reachable under the options, the root (empty
/// path) included; the visitor filters. Deterministic order: directions by
/// ascending steepness, multiplicities ascending, label e before h.
void enumerate_paths(const EnumOptions& options,
                     const std::function<void(const PathState&)>& visit);

/// Minimum action over all-e paths with exactly the given lattice count,
/// with every minimizer collected (exact tie detection). Uses iterative
/// deepening from the inscribed-rectangle lower bound.
struct MinimizeResult {
    Rational min_action;
    std::vector<ConvexGenerator> minimizers;
};
MinimizeResult minimize_action(const ToricDomain& domain, std::int64_t target_lattice,
                               BudgetCounter& budget);

}  // namespace ech::detail
