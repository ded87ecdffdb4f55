#include "path_search.hpp"

#include <algorithm>
#include <limits>
#include <numeric>

namespace ech::detail {

namespace {

// Candidate next directions, strictly steeper than `last`, ascending by
// steepness. amax/bmax bound the primitive components; negative means "no
// bound from this side" and must be resolved by the caller beforehand.
std::vector<Direction> candidate_directions(const Direction& last, std::int64_t amax,
                                            std::int64_t bmax) {
    std::vector<Direction> dirs;
    for (std::int64_t a = 0; a <= amax; ++a) {
        for (std::int64_t b = (a == 0 ? 1 : 0); b <= (a == 0 ? 1 : bmax); ++b) {
            if (std::gcd(a, b) != 1) continue;
            Direction d{a, b};
            if (!steeper(d, last)) continue;
            dirs.push_back(d);
        }
    }
    std::sort(dirs.begin(), dirs.end(),
              [](const Direction& l, const Direction& r) { return less_steep(l, r); });
    return dirs;
}

struct Walker {
    const EnumOptions& opt;
    const std::function<void(const PathState&)>& visit;
    PathState state;

    void run() { step(Direction{1, -1}); }  // sentinel: all directions are steeper

    std::vector<Direction> directions(const Direction& last) const {
        std::int64_t amax = -1;
        std::int64_t bmax = -1;
        if (opt.action_cap) {
            const Rational remaining = *opt.action_cap - state.action;
            if (remaining.sign() < 0) return {};
            amax = (remaining / opt.geometry->rect_h()).floor_int64();
            bmax = (remaining / opt.geometry->rect_w()).floor_int64();
        }
        const std::int64_t index_limit =
            opt.exact_index ? *opt.exact_index : (opt.max_index ? *opt.max_index : -1);
        if (index_limit >= 0) {
            // One step in direction (a, b) raises the index by at least
            // 2(a + b) - 1.
            const std::int64_t room =
                std::max<std::int64_t>(0, (index_limit - state.ech_index() + 1) / 2);
            if (amax < 0 || room < amax) amax = room;
            if (bmax < 0 || room < bmax) bmax = room;
        }
        if (amax < 0 || bmax < 0) {
            throw Error("path enumeration needs an action or index bound");
        }
        return candidate_directions(last, amax, bmax);
    }

    bool infeasible_for_xy_target() const {
        if (!opt.min_doubled_xy_minus_h || !opt.action_cap) return false;
        // Future edges add at most (cap - action)/min_side to x + y.
        const Rational remaining = *opt.action_cap - state.action;
        const Rational potential =
            Rational(2 * (state.x + state.y) - state.h) +
            Rational(2) * (remaining / opt.geometry->min_side());
        return potential < Rational(*opt.min_doubled_xy_minus_h);
    }

    void step(const Direction& last) {
        opt.budget->spend();
        if (infeasible_for_xy_target()) return;
        visit(state);
        if (opt.exact_index && state.ech_index() >= *opt.exact_index) {
            return;  // extensions only increase the index
        }
        const std::int64_t index_limit =
            opt.exact_index ? *opt.exact_index
                            : (opt.max_index ? *opt.max_index
                                             : std::numeric_limits<std::int64_t>::max());
        for (const Direction& dir : directions(last)) {
            const bool axis = dir.a == 0 || dir.b == 0;
            const Rational* cost = opt.action_cap ? &opt.geometry->unit_cost(dir) : nullptr;
            const std::int64_t max_label = (opt.allow_h && !axis) ? 1 : 0;
            for (std::int64_t m = 1;; ++m) {
                const std::int64_t delta_l = lattice_count_delta(dir, m, state.x);
                const std::int64_t base_index = state.ech_index() + 2 * delta_l;
                if (base_index - max_label > index_limit) break;
                Rational new_action = state.action;
                if (cost) {
                    new_action += Rational(m) * *cost;
                    if (new_action > *opt.action_cap) break;
                }
                const std::int64_t saved_x = state.x;
                const std::int64_t saved_y = state.y;
                const std::int64_t saved_lattice = state.lattice;
                const Rational saved_action = state.action;
                state.x += m * dir.a;
                state.y += m * dir.b;
                state.lattice += delta_l;
                state.action = new_action;
                for (std::int64_t label = 0; label <= max_label; ++label) {
                    if (base_index - label > index_limit) continue;
                    state.edges.push_back({dir, m, label});
                    state.h += label;
                    step(dir);
                    state.h -= label;
                    state.edges.pop_back();
                }
                state.x = saved_x;
                state.y = saved_y;
                state.lattice = saved_lattice;
                state.action = saved_action;
            }
        }
    }
};

}  // namespace

void enumerate_paths(const EnumOptions& options,
                     const std::function<void(const PathState&)>& visit) {
    if (options.budget == nullptr) throw Error("enumerate_paths needs a budget");
    if (options.action_cap && options.geometry == nullptr) {
        throw Error("an action cap needs domain geometry");
    }
    Walker walker{options, visit, {}};
    walker.run();
}

namespace {

// Smallest conceivable action of an all-e path with the given lattice
// count: relax into the inscribed-rectangle cost model, where the best
// bounding box (x+1)(y+1) >= L is optimal.
Rational lattice_lower_bound(SearchGeometry& geometry, std::int64_t target_lattice) {
    Rational best(-1);
    for (std::int64_t x = 0; x < target_lattice; ++x) {
        const std::int64_t y = (target_lattice + x) / (x + 1) - 1;  // ceil(L/(x+1)) - 1
        const Rational value = geometry.rect_h() * Rational(x) + geometry.rect_w() * Rational(y);
        if (best.sign() < 0 || value < best) best = value;
    }
    return best;
}

// One bounded minimization pass: enumerate every all-e path with action <=
// cap, tightening the incumbent as completions arrive. Paths tied with the
// final minimum are all collected (the cap is inclusive and only ever drops
// to the incumbent itself, never below).
struct MinimizePass {
    SearchGeometry& geometry;
    std::int64_t target_lattice;
    BudgetCounter& budget;
    Rational cap;

    bool found = false;
    MinimizeResult result;

    void run() { step({}, Direction{1, -1}); }

    void step(const PathState& state, const Direction& last) {
        budget.spend();
        if (state.lattice == target_lattice) {
            if (!found || state.action < result.min_action) {
                found = true;
                result.min_action = state.action;
                result.minimizers.clear();
                result.minimizers.push_back(state.generator());
                if (state.action < cap) cap = state.action;
            } else if (state.action == result.min_action) {
                result.minimizers.push_back(state.generator());
            }
            return;  // extensions only increase the lattice count
        }
        const Rational remaining = cap - state.action;
        if (remaining.sign() < 0) return;
        const std::int64_t amax = (remaining / geometry.rect_h()).floor_int64();
        const std::int64_t bmax = (remaining / geometry.rect_w()).floor_int64();
        for (const Direction& dir : candidate_directions(last, amax, bmax)) {
            const Rational& cost = geometry.unit_cost(dir);
            for (std::int64_t m = 1;; ++m) {
                const std::int64_t delta_l = lattice_count_delta(dir, m, state.x);
                if (state.lattice + delta_l > target_lattice) break;
                const Rational new_action = state.action + Rational(m) * cost;
                if (new_action > cap) break;
                PathState next;
                next.edges = state.edges;
                next.edges.push_back({dir, m, 0});
                next.x = state.x + m * dir.a;
                next.y = state.y + m * dir.b;
                next.lattice = state.lattice + delta_l;
                next.action = new_action;
                step(next, dir);
            }
        }
    }
};

}  // namespace

MinimizeResult minimize_action(const ToricDomain& domain, std::int64_t target_lattice,
                               BudgetCounter& budget) {
    if (target_lattice < 1) throw Error("lattice target must be at least 1");
    if (target_lattice == 1) {
        return {Rational(0), {ConvexGenerator()}};
    }
    SearchGeometry geometry(domain);
    const std::int64_t k = target_lattice - 1;
    // Axis paths are always feasible and cap the deepening.
    const Rational axis_cost =
        std::min(Rational(k) * domain.height(), Rational(k) * domain.width());

    Rational cap = lattice_lower_bound(geometry, target_lattice);
    if (axis_cost < cap) cap = axis_cost;

    while (true) {
        MinimizePass pass{geometry, target_lattice, budget, cap};
        pass.run();
        if (pass.found) {
            return pass.result;
        }
        if (cap >= axis_cost) {
            throw Error("action minimization failed to find a feasible path");
        }
        cap = std::min(cap * Rational(2), axis_cost);
    }
}

}  // namespace ech::detail
