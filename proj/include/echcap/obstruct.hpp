#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "echcap/domain.hpp"
#include "echcap/generator.hpp"
#include "echcap/rational.hpp"

namespace ech {

/// The order relation between generators induced by an embedding question
/// "domain into target". True iff
///   (i)   the ECH indices agree,
///   (ii)  action_domain(lhs) <= action_target(rhs), and
///   (iii) 2(x + y)(lhs) - h(lhs) >= 2(x + y + m - 1)(rhs)
/// (condition (iii) kept doubled to stay in integers). Every edge of rhs
/// must be labeled e; otherwise HLabeledTargetError.
bool le(const ToricDomain& domain, const ToricDomain& target, const ConvexGenerator& lhs,
        const ConvexGenerator& rhs);

struct SearchOptions {
    /// Relax the minimality requirement on targets to "all edges labeled e".
    /// Verdicts computed this way are conditional.
    bool conjectural_mode = false;
    /// Cap on the number of factors tried; defaults to m(target generator).
    /// With a cap below that, an empty search only rules out witnesses with
    /// n <= max_n, so exclusion verdicts are relative to the cap.
    std::optional<int> max_n;
    /// Shared node budget for one query (witness search including its
    /// minimality verification and candidate enumerations).
    std::uint64_t node_budget = 20'000'000;
};

struct SearchTrace {
    std::uint64_t nodes_used = 0;
    std::uint64_t factorizations = 0;
    std::uint64_t assignments = 0;
};

/// All generators lam with le(domain, target, lam, rhs_factor), sorted by
/// (action, canonical text). Finite: the action cap from (ii) and the
/// inscribed-rectangle bound close the search space.
std::vector<ConvexGenerator> candidates(const ToricDomain& domain, const ToricDomain& target,
                                        const ConvexGenerator& rhs_factor,
                                        std::uint64_t node_budget = 20'000'000);

/// A witness for the embedding criterion: paired factorizations of lambda
/// and of the queried target generator satisfying all three bullet
/// conditions. Valid by construction; certificate_error re-checks one
/// independently.
struct Certificate {
    ToricDomain domain;
    ToricDomain target_domain;
    ConvexGenerator target;  // the queried generator (product of pair rhs)
    ConvexGenerator lambda;  // product of pair lhs
    std::vector<std::pair<ConvexGenerator, ConvexGenerator>> pairs;

    int n() const { return static_cast<int>(pairs.size()); }
};

/// Independent checker: re-multiplies the products, re-evaluates the order
/// relation for each pair, the shared-elliptic condition for distinct
/// pairs, and the index equality over all 2^n subsets. Returns nullopt when
/// the certificate is valid, otherwise the first failure.
std::optional<std::string> certificate_error(const Certificate& cert);

/// Exhaustive witness search for one target generator: n over 1..m(target),
/// factorizations in canonical order, candidate assignments in sorted
/// order. Returns the first certificate found, or nullopt when the fully
/// enumerated space contains none (a proof of exclusion). Preconditions:
/// the target generator must be minimal for the target domain, or all-e in
/// conjectural mode (NotMinimalError otherwise). Budget exhaustion raises
/// BudgetExceededError, never a verdict.
std::optional<Certificate> find_witness(const ToricDomain& domain, const ToricDomain& target,
                                        const ConvexGenerator& target_gen,
                                        const SearchOptions& options = {},
                                        SearchTrace* trace = nullptr);

struct Verdict {
    bool excluded = false;
    /// True when computed under conjectural_mode; such reports are
    /// conditional on the relaxed hypothesis.
    bool conditional = false;
    /// The first target generator with no witness (excluded verdicts).
    std::optional<ConvexGenerator> failing_target;
    /// One certificate per target (not-excluded verdicts).
    std::vector<Certificate> certificates;
    SearchTrace trace;
};

/// Runs find_witness over each target generator in order. Excluded means no
/// symplectic embedding of the domain into the target exists; it is only
/// ever reported on a definitive empty search, never on budget exhaustion.
Verdict check_embedding(const ToricDomain& domain, const ToricDomain& target,
                        const std::vector<ConvexGenerator>& target_gens,
                        const SearchOptions& options = {});

}  // namespace ech
