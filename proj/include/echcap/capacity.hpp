#pragma once

#include <cstdint>
#include <optional>

#include "echcap/domain.hpp"
#include "echcap/generator.hpp"
#include "echcap/rational.hpp"

namespace ech {

/// Node budget for one capacity-style query. Exceeding it raises
/// BudgetExceededError instead of returning a possibly-wrong answer.
struct SearchBudget {
    std::uint64_t nodes = 10'000;
};

/// k-th ECH capacity of the domain: the exact minimum action over convex
/// integral paths (all-e generators) enclosing k+1 lattice points, found by
/// branch-and-bound enumeration. c_0 = 0.
Rational capacity(const ToricDomain& domain, std::int64_t k, SearchBudget budget = {});

/// Closed form for ellipsoids: the k-th smallest value of m*a + n*b over
/// nonnegative integers, repetitions counted.
Rational capacity_oracle_ellipsoid(const Rational& a, const Rational& b, std::int64_t k);

/// Closed form for polydisks: min{a*m + b*n : (m+1)(n+1) >= k+1}.
Rational capacity_oracle_polydisk(const Rational& a, const Rational& b, std::int64_t k);

/// The unique all-e generator minimizing the action among those with
/// lattice count k+1, or nullopt when the minimizer is not unique. When
/// present, its action equals capacity(domain, k) and its index is 2k.
std::optional<ConvexGenerator> find_minimal_generator(const ToricDomain& domain, std::int64_t k,
                                                      SearchBudget budget = {});

/// The maximal convex integral path tangent to the line of slope -b/a
/// through the lattice point (px, py), all edges e. Minimal for E(a, b).
ConvexGenerator minimal_ellipsoid_family(const Rational& a, const Rational& b, std::int64_t px,
                                         std::int64_t py);

/// Decides whether e(1,0)^x e(0,1)^y is minimal for P(a, b): every other
/// nonnegative pair (x', y') with (x'+1)(y'+1) >= (x+1)(y+1) must cost
/// strictly more than b*x + a*y. Finite scan.
bool is_minimal_polydisk(std::int64_t x, std::int64_t y, const Rational& a, const Rational& b);

}  // namespace ech
