#include "echcap/obstruct.hpp"

#include <algorithm>
#include <map>

#include "echcap/capacity.hpp"
#include "echcap/errors.hpp"
#include "path_search.hpp"

namespace ech {

namespace {

std::int64_t doubled_xy_minus_h(const ConvexGenerator& g) {
    return 2 * (g.x() + g.y()) - g.h_count();
}

std::int64_t doubled_count_bound(const ConvexGenerator& g) {
    return 2 * (g.x() + g.y() + g.total_multiplicity() - 1);
}

void require_all_e(const ConvexGenerator& rhs) {
    if (!rhs.all_elliptic()) {
        throw HLabeledTargetError("right-hand generator must have all edges labeled e: " +
                                  rhs.str());
    }
}

}  // namespace

bool le(const ToricDomain& domain, const ToricDomain& target, const ConvexGenerator& lhs,
        const ConvexGenerator& rhs) {
    require_all_e(rhs);
    if (lhs.ech_index() != rhs.ech_index()) return false;
    if (doubled_xy_minus_h(lhs) < doubled_count_bound(rhs)) return false;
    return domain.action(lhs) <= target.action(rhs);
}

namespace {

std::vector<ConvexGenerator> candidates_impl(detail::SearchGeometry& geometry,
                                             const ToricDomain& target,
                                             const ConvexGenerator& rhs,
                                             detail::BudgetCounter& budget) {
    require_all_e(rhs);
    if (rhs.empty()) throw Error("candidate search target must be nonempty");
    const std::int64_t index = rhs.ech_index();
    const std::int64_t count_bound = doubled_count_bound(rhs);
    const Rational cap = target.action(rhs);

    std::vector<ConvexGenerator> found;
    detail::EnumOptions options;
    options.geometry = &geometry;
    options.action_cap = cap;
    options.exact_index = index;
    options.allow_h = true;
    options.min_doubled_xy_minus_h = count_bound;
    options.budget = &budget;
    detail::enumerate_paths(options, [&](const detail::PathState& state) {
        if (state.ech_index() != index) return;
        if (2 * (state.x + state.y) - state.h < count_bound) return;
        found.push_back(ConvexGenerator::make(state.edges, false));
    });

    std::vector<std::pair<Rational, ConvexGenerator>> keyed;
    keyed.reserve(found.size());
    const ToricDomain& dom = geometry.domain();
    for (auto& g : found) keyed.emplace_back(dom.action(g), std::move(g));
    std::sort(keyed.begin(), keyed.end(), [](const auto& l, const auto& r) {
        if (l.first != r.first) return l.first < r.first;
        return l.second.str() < r.second.str();
    });
    std::vector<ConvexGenerator> out;
    out.reserve(keyed.size());
    for (auto& kv : keyed) out.push_back(std::move(kv.second));
    return out;
}

}  // namespace

std::vector<ConvexGenerator> candidates(const ToricDomain& domain, const ToricDomain& target,
                                        const ConvexGenerator& rhs_factor,
                                        std::uint64_t node_budget) {
    detail::SearchGeometry geometry(domain);
    detail::BudgetCounter budget{node_budget};
    return candidates_impl(geometry, target, rhs_factor, budget);
}

// ---------------------------------------------------------------------------
// Certificate checking

namespace {

// Index equality over every sub-multiset of the distinct pairs, counted
// with multiplicities 0..count. Equivalent to the subset condition because
// identical pairs contribute identically.
bool subset_indices_match(
    const std::vector<std::tuple<ConvexGenerator, ConvexGenerator, int>>& grouped) {
    std::vector<int> chosen(grouped.size(), 0);
    while (true) {
        // Advance the multiplicity odometer.
        std::size_t pos = 0;
        while (pos < grouped.size()) {
            if (chosen[pos] < std::get<2>(grouped[pos])) {
                ++chosen[pos];
                break;
            }
            chosen[pos] = 0;
            ++pos;
        }
        if (pos == grouped.size()) return true;  // wrapped: all combinations seen

        ConvexGenerator lhs;
        ConvexGenerator rhs;
        for (std::size_t j = 0; j < grouped.size(); ++j) {
            for (int c = 0; c < chosen[j]; ++c) {
                lhs = lhs * std::get<0>(grouped[j]);
                rhs = rhs * std::get<1>(grouped[j]);
            }
        }
        if (lhs.ech_index() != rhs.ech_index()) return false;
    }
}

std::vector<std::tuple<ConvexGenerator, ConvexGenerator, int>> group_pairs(
    const std::vector<std::pair<ConvexGenerator, ConvexGenerator>>& pairs) {
    std::vector<std::tuple<ConvexGenerator, ConvexGenerator, int>> grouped;
    for (const auto& p : pairs) {
        auto it = std::find_if(grouped.begin(), grouped.end(), [&](const auto& g) {
            return std::get<0>(g) == p.first && std::get<1>(g) == p.second;
        });
        if (it == grouped.end()) {
            grouped.emplace_back(p.first, p.second, 1);
        } else {
            ++std::get<2>(*it);
        }
    }
    return grouped;
}

}  // namespace

std::optional<std::string> certificate_error(const Certificate& cert) {
    try {
        ConvexGenerator lambda;
        ConvexGenerator target;
        for (const auto& [lhs, rhs] : cert.pairs) {
            lambda = lambda * lhs;
            target = target * rhs;
        }
        if (!(lambda == cert.lambda)) {
            return "product of pair left-hand sides does not equal lambda";
        }
        if (!(target == cert.target)) {
            return "product of pair right-hand sides does not equal the target generator";
        }
        for (const auto& [lhs, rhs] : cert.pairs) {
            if (!le(cert.domain, cert.target_domain, lhs, rhs)) {
                return "pair (" + lhs.str() + ", " + rhs.str() + ") fails the order relation";
            }
        }
        const int n = cert.n();
        for (int i = 0; i < n; ++i) {
            for (int j = i + 1; j < n; ++j) {
                const auto& pi = cert.pairs[static_cast<std::size_t>(i)];
                const auto& pj = cert.pairs[static_cast<std::size_t>(j)];
                const bool identical = pi.first == pj.first && pi.second == pj.second;
                if (!identical && shares_elliptic_orbit(pi.first, pj.first)) {
                    return "distinct pairs share an elliptic orbit: (" + pi.first.str() + ", " +
                           pj.first.str() + ")";
                }
            }
        }
        if (n <= 16) {
            // Raw subset enumeration.
            for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
                ConvexGenerator lhs;
                ConvexGenerator rhs;
                for (int i = 0; i < n; ++i) {
                    if (mask & (1u << i)) {
                        lhs = lhs * cert.pairs[static_cast<std::size_t>(i)].first;
                        rhs = rhs * cert.pairs[static_cast<std::size_t>(i)].second;
                    }
                }
                if (lhs.ech_index() != rhs.ech_index()) {
                    return "subset index mismatch at mask " + std::to_string(mask);
                }
            }
        } else if (!subset_indices_match(group_pairs(cert.pairs))) {
            return "subset index mismatch";
        }
    } catch (const Error& e) {
        return std::string("certificate inconsistent: ") + e.what();
    }
    return std::nullopt;
}

// ---------------------------------------------------------------------------
// Witness search

namespace {

struct DistinctPair {
    const ConvexGenerator* lhs;
    const ConvexGenerator* rhs;
    int count;
};

// Total h exponent per direction over the whole multiset must stay <= 1,
// otherwise the product of all left-hand sides is undefined.
bool product_defined(const std::vector<DistinctPair>& pairs) {
    std::map<std::pair<std::int64_t, std::int64_t>, std::int64_t> h_total;
    for (const auto& p : pairs) {
        for (const auto& e : p.lhs->edges()) {
            if (e.h_exponent == 0) continue;
            h_total[{e.dir.a, e.dir.b}] += e.h_exponent * p.count;
        }
    }
    return std::all_of(h_total.begin(), h_total.end(),
                       [](const auto& kv) { return kv.second <= 1; });
}

bool distinct_pairs_share_elliptic(const std::vector<DistinctPair>& pairs) {
    for (std::size_t i = 0; i < pairs.size(); ++i) {
        for (std::size_t j = i + 1; j < pairs.size(); ++j) {
            if (shares_elliptic_orbit(*pairs[i].lhs, *pairs[j].lhs)) return true;
        }
    }
    return false;
}

bool subset_indices_match_fast(const std::vector<DistinctPair>& pairs) {
    std::vector<std::tuple<ConvexGenerator, ConvexGenerator, int>> grouped;
    grouped.reserve(pairs.size());
    for (const auto& p : pairs) grouped.emplace_back(*p.lhs, *p.rhs, p.count);
    return subset_indices_match(grouped);
}

class WitnessSearch {
public:
    WitnessSearch(const ToricDomain& domain, const ToricDomain& target,
                  const SearchOptions& options, SearchTrace& trace)
        : domain_(domain),
          target_(target),
          geometry_(domain),
          options_(options),
          budget_{options.node_budget},
          trace_(trace) {}

    detail::BudgetCounter& budget() { return budget_; }

    std::optional<Certificate> run(const ConvexGenerator& target_gen) {
        if (target_gen.empty()) {
            return Certificate{domain_, target_, target_gen, ConvexGenerator(), {}};
        }
        const int total = static_cast<int>(target_gen.total_multiplicity());
        int n_max = total;
        if (options_.max_n && *options_.max_n < n_max) n_max = *options_.max_n;

        std::optional<Certificate> found;
        for (int n = 1; n <= n_max && !found; ++n) {
            for_each_factorization(target_gen, n,
                                   [&](std::span<const ConvexGenerator> factors) {
                                       ++trace_.factorizations;
                                       found = try_factorization(target_gen, factors);
                                       return !found.has_value();
                                   });
        }
        return found;
    }

private:
    struct Group {
        const ConvexGenerator* rhs;
        int count;
        const std::vector<ConvexGenerator>* cands;
    };

    const std::vector<ConvexGenerator>& candidates_for(const ConvexGenerator& rhs) {
        const std::string key = rhs.str();
        auto it = cache_.find(key);
        if (it == cache_.end()) {
            it = cache_.emplace(key, candidates_impl(geometry_, target_, rhs, budget_)).first;
        }
        return it->second;
    }

    std::optional<Certificate> try_factorization(const ConvexGenerator& target_gen,
                                                 std::span<const ConvexGenerator> factors) {
        // The factor tuple arrives in nondecreasing order; group equal ones.
        std::vector<Group> groups;
        for (const auto& f : factors) {
            if (!groups.empty() && *groups.back().rhs == f) {
                ++groups.back().count;
            } else {
                groups.push_back({&f, 1, nullptr});
            }
        }
        for (auto& g : groups) {
            g.cands = &candidates_for(*g.rhs);
            if (g.cands->empty()) return std::nullopt;
        }
        std::vector<std::vector<int>> chosen(groups.size());
        return assign(target_gen, groups, chosen, 0);
    }

    // Nondecreasing index multisets per group, lexicographic over groups:
    // the first assignment that satisfies every condition wins.
    std::optional<Certificate> assign(const ConvexGenerator& target_gen,
                                      const std::vector<Group>& groups,
                                      std::vector<std::vector<int>>& chosen, std::size_t gi) {
        if (gi == groups.size()) {
            return evaluate(target_gen, groups, chosen);
        }
        const Group& g = groups[gi];
        std::vector<int>& slots = chosen[gi];
        const std::function<std::optional<Certificate>(int, int)> pick =
            [&](int slot, int min_index) -> std::optional<Certificate> {
            if (slot == g.count) {
                return assign(target_gen, groups, chosen, gi + 1);
            }
            for (int idx = min_index; idx < static_cast<int>(g.cands->size()); ++idx) {
                slots.push_back(idx);
                auto result = pick(slot + 1, idx);
                slots.pop_back();
                if (result) return result;
            }
            return std::nullopt;
        };
        return pick(0, 0);
    }

    std::optional<Certificate> evaluate(const ConvexGenerator& target_gen,
                                        const std::vector<Group>& groups,
                                        const std::vector<std::vector<int>>& chosen) {
        budget_.spend();
        ++trace_.assignments;

        std::vector<DistinctPair> pairs;
        for (std::size_t gi = 0; gi < groups.size(); ++gi) {
            const Group& g = groups[gi];
            for (std::size_t s = 0; s < chosen[gi].size(); ++s) {
                const ConvexGenerator* lam = &(*g.cands)[static_cast<std::size_t>(chosen[gi][s])];
                if (s > 0 && chosen[gi][s] == chosen[gi][s - 1]) {
                    ++pairs.back().count;
                } else {
                    pairs.push_back({lam, g.rhs, 1});
                }
            }
        }
        if (!product_defined(pairs)) return std::nullopt;
        if (distinct_pairs_share_elliptic(pairs)) return std::nullopt;
        if (!subset_indices_match_fast(pairs)) return std::nullopt;

        ConvexGenerator lambda;
        std::vector<std::pair<ConvexGenerator, ConvexGenerator>> expanded;
        for (const auto& p : pairs) {
            for (int c = 0; c < p.count; ++c) {
                lambda = lambda * *p.lhs;
                expanded.emplace_back(*p.lhs, *p.rhs);
            }
        }
        Certificate cert{domain_, target_, target_gen, std::move(lambda), std::move(expanded)};
        if (auto err = certificate_error(cert)) {
            throw Error("internal: witness search produced an invalid certificate: " + *err);
        }
        return cert;
    }

    const ToricDomain& domain_;
    const ToricDomain& target_;
    detail::SearchGeometry geometry_;
    const SearchOptions& options_;
    detail::BudgetCounter budget_;
    SearchTrace& trace_;
    std::map<std::string, std::vector<ConvexGenerator>> cache_;
};

void verify_target_precondition(const ToricDomain& target, const ConvexGenerator& target_gen,
                                const SearchOptions& options, detail::BudgetCounter& budget) {
    if (!target_gen.all_elliptic()) {
        throw NotMinimalError("target generator must have all edges labeled e: " +
                              target_gen.str());
    }
    if (options.conjectural_mode) return;
    if (target_gen.empty()) return;

    // Fast criterion for axis-only generators over polydisks; the generic
    // route decides by exhaustive minimization.
    if (target.kind() == DomainKind::polydisk) {
        bool axis_only = true;
        for (const auto& e : target_gen.edges()) {
            if (e.dir.a != 0 && e.dir.b != 0) axis_only = false;
        }
        if (axis_only &&
            is_minimal_polydisk(target_gen.x(), target_gen.y(), target.param_a(),
                                target.param_b())) {
            return;
        }
    }
    auto result = detail::minimize_action(target, target_gen.lattice_count(), budget);
    if (result.minimizers.size() != 1 || !(result.minimizers.front() == target_gen)) {
        throw NotMinimalError("target generator is not minimal for " + target.str() + ": " +
                              target_gen.str());
    }
}

}  // namespace

std::optional<Certificate> find_witness(const ToricDomain& domain, const ToricDomain& target,
                                        const ConvexGenerator& target_gen,
                                        const SearchOptions& options, SearchTrace* trace) {
    SearchTrace local;
    SearchTrace& t = trace ? *trace : local;
    WitnessSearch search(domain, target, options, t);
    verify_target_precondition(target, target_gen, options, search.budget());
    auto result = search.run(target_gen);
    t.nodes_used = options.node_budget - search.budget().remaining;
    return result;
}

Verdict check_embedding(const ToricDomain& domain, const ToricDomain& target,
                        const std::vector<ConvexGenerator>& target_gens,
                        const SearchOptions& options) {
    Verdict verdict;
    verdict.conditional = options.conjectural_mode;
    for (const auto& gen : target_gens) {
        SearchTrace trace;
        auto witness = find_witness(domain, target, gen, options, &trace);
        verdict.trace.nodes_used += trace.nodes_used;
        verdict.trace.factorizations += trace.factorizations;
        verdict.trace.assignments += trace.assignments;
        if (!witness) {
            verdict.excluded = true;
            verdict.failing_target = gen;
            verdict.certificates.clear();
            return verdict;
        }
        verdict.certificates.push_back(std::move(*witness));
    }
    return verdict;
}

}  // namespace ech
