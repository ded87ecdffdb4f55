#pragma once

#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "echcap/domain.hpp"
#include "echcap/generator.hpp"
#include "echcap/obstruct.hpp"
#include "echcap/rational.hpp"

namespace ech {

/// One-parameter family of target domains, with the minimal-generator
/// recipe its members share: minimality is scale-invariant inside a family,
/// so the recipe does not depend on c.
struct TargetFamily {
    enum class Kind { ball, ellipsoid_ratio, square_polydisk, polydisk_ratio };

    Kind kind = Kind::ball;
    Rational ratio{1};  // b for the ratio kinds

    static TargetFamily ball() { return {Kind::ball, Rational(1)}; }
    static TargetFamily ellipsoid_ratio(const Rational& b) { return {Kind::ellipsoid_ratio, b}; }
    static TargetFamily square_polydisk() { return {Kind::square_polydisk, Rational(1)}; }
    static TargetFamily polydisk_ratio(const Rational& b) { return {Kind::polydisk_ratio, b}; }

    /// "ball", "ellipsoid:b", "square", "polydisk:b".
    static TargetFamily parse(std::string_view text);
    std::string str() const;

    /// The family member at scale c: B(c), E(bc, c), P(c, c) or P(bc, c).
    ToricDomain member(const Rational& c) const;

    /// Minimal target generators up to degree d_max: e(1,1)^d for balls,
    /// e(b,1)^d for integer-ratio ellipsoids, and axis generators
    /// e(1,0)^d e(0,1)^k filtered through is_minimal_polydisk for polydisk
    /// kinds.
    std::vector<ConvexGenerator> target_recipe(int d_max) const;

    /// Smallest c with domain contained in member(c): embedding by
    /// inclusion, hence never excluded at or above it.
    Rational inclusion_scale(const ToricDomain& domain) const;
};

struct ThresholdResult {
    /// check_embedding excludes at threshold - tol and does not exclude at
    /// threshold + tol (both re-verified before returning).
    Rational threshold;
    Rational bracket_lo;  // last scale still excluded
    Rational bracket_hi;  // first scale found not excluded
    /// Failing target generator observed at bracket_lo.
    ConvexGenerator binding_target;
    int verdict_evaluations = 0;
};

/// Bisection over rational scales with simplest-rational midpoints, so
/// coefficients stay small. Monotonicity of the verdict in c is spot-checked
/// at interior probes; a violation raises MonotonicityError rather than
/// returning a bound. NoBracketError when no excluded scale can be found.
ThresholdResult exclusion_threshold(const ToricDomain& domain, const TargetFamily& family,
                                    const std::vector<ConvexGenerator>& targets,
                                    const Rational& tol, const SearchOptions& options = {});

/// min(1 + a, (3d - 2 + a)/d, (d + 3)/2): the closed-form lower bound on
/// the ball scale admitting P(a,1), one value of the degree-d obstruction.
Rational y1_bound(const Rational& a, std::int64_t d);

struct ScanRow {
    Rational a;
    ThresholdResult bound;
    /// For ball targets: the squared volume floor 2*area(domain), compared
    /// exactly against threshold^2 (no floating square roots).
    Rational volume_floor_sq;
    bool threshold_meets_volume_floor = false;
};

/// One threshold row per grid value; rows are independent and may run on
/// several threads, output order fixed by the grid.
std::vector<ScanRow> scan(const std::function<ToricDomain(const Rational&)>& domain_family,
                          const std::vector<Rational>& grid, const TargetFamily& family,
                          int d_max, const Rational& tol, const SearchOptions& options = {},
                          int jobs = 1);

}  // namespace ech
