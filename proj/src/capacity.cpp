#include "echcap/capacity.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "echcap/errors.hpp"
#include "path_search.hpp"

namespace ech {

Rational capacity(const ToricDomain& domain, std::int64_t k, SearchBudget budget) {
    if (k < 0) throw Error("capacity index must be nonnegative");
    detail::BudgetCounter counter{budget.nodes};
    return detail::minimize_action(domain, k + 1, counter).min_action;
}

std::optional<ConvexGenerator> find_minimal_generator(const ToricDomain& domain, std::int64_t k,
                                                      SearchBudget budget) {
    if (k < 0) throw Error("capacity index must be nonnegative");
    detail::BudgetCounter counter{budget.nodes};
    auto result = detail::minimize_action(domain, k + 1, counter);
    if (result.minimizers.size() != 1) return std::nullopt;
    return result.minimizers.front();
}

Rational capacity_oracle_ellipsoid(const Rational& a, const Rational& b, std::int64_t k) {
    if (a.sign() <= 0 || b.sign() <= 0) throw Error("ellipsoid parameters must be positive");
    if (k < 0) throw Error("capacity index must be nonnegative");
    if (k == 0) return Rational(0);
    // The k+1 smallest combinations all lie within k * min(a, b).
    const Rational bound = Rational(k) * std::min(a, b);
    std::vector<Rational> values;
    for (std::int64_t m = 0; Rational(m) * a <= bound; ++m) {
        for (std::int64_t n = 0;; ++n) {
            Rational v = Rational(m) * a + Rational(n) * b;
            if (v > bound) break;
            values.push_back(std::move(v));
        }
    }
    std::sort(values.begin(), values.end());
    return values[static_cast<std::size_t>(k)];
}

Rational capacity_oracle_polydisk(const Rational& a, const Rational& b, std::int64_t k) {
    if (a.sign() <= 0 || b.sign() <= 0) throw Error("polydisk parameters must be positive");
    if (k < 0) throw Error("capacity index must be nonnegative");
    Rational best(-1);
    for (std::int64_t m = 0; m <= k; ++m) {
        const std::int64_t n = (k + 1 + m) / (m + 1) - 1;  // ceil((k+1)/(m+1)) - 1
        const Rational value = Rational(m) * a + Rational(n) * b;
        if (best.sign() < 0 || value < best) best = value;
    }
    return best;
}

ConvexGenerator minimal_ellipsoid_family(const Rational& a, const Rational& b, std::int64_t px,
                                         std::int64_t py) {
    if (a.sign() <= 0 || b.sign() <= 0) throw Error("ellipsoid parameters must be positive");
    if (px < 0 || py < 0) throw Error("tangency point must lie in the first quadrant");
    // Slope -b/a = -beta/alpha in lowest terms; the tangent line through
    // (px, py) is beta*x + alpha*y = c.
    const Rational slope = b / a;
    if (!slope.numerator().fits_slong_p() || !slope.denominator().fits_slong_p()) {
        throw Error("slope too large for path construction");
    }
    const std::int64_t beta = static_cast<std::int64_t>(slope.numerator().get_si());
    const std::int64_t alpha = static_cast<std::int64_t>(slope.denominator().get_si());
    const std::int64_t c = beta * px + alpha * py;
    if (c == 0) return ConvexGenerator();
    const std::int64_t xmax = c / beta;
    if (xmax > 2'000'000) {
        throw BudgetExceededError("tangent path construction too wide");
    }

    // Upper hull of the column tops under the line, left to right.
    std::vector<std::pair<std::int64_t, std::int64_t>> hull;
    for (std::int64_t x = 0; x <= xmax; ++x) {
        const std::int64_t top = (c - beta * x) / alpha;
        while (hull.size() >= 2) {
            const auto& p = hull[hull.size() - 2];
            const auto& q = hull[hull.size() - 1];
            // Keep only strict right turns.
            if ((q.first - p.first) * (top - q.second) -
                    (q.second - p.second) * (x - q.first) <
                0) {
                break;
            }
            hull.pop_back();
        }
        hull.push_back({x, top});
    }

    std::vector<LabeledEdge> edges;
    for (std::size_t i = 0; i + 1 < hull.size(); ++i) {
        const std::int64_t dx = hull[i + 1].first - hull[i].first;
        const std::int64_t dy = hull[i].second - hull[i + 1].second;
        const std::int64_t g = std::gcd(dx, dy);
        edges.push_back({Direction{dx / g, dy / g}, g, 0});
    }
    if (hull.back().second > 0) {
        edges.push_back({Direction{0, 1}, hull.back().second, 0});
    }
    return ConvexGenerator::make(std::move(edges), false);
}

bool is_minimal_polydisk(std::int64_t x, std::int64_t y, const Rational& a, const Rational& b) {
    if (a.sign() <= 0 || b.sign() <= 0) throw Error("polydisk parameters must be positive");
    if (x < 0 || y < 0) throw Error("corner exponents must be nonnegative");
    const std::int64_t points = (x + 1) * (y + 1);
    const Rational best = b * Rational(x) + a * Rational(y);
    const std::int64_t x_limit = (best / b).floor_int64();
    for (std::int64_t xp = 0; xp <= x_limit; ++xp) {
        const std::int64_t yp = (points + xp) / (xp + 1) - 1;  // ceil(points/(xp+1)) - 1
        if (xp == x && yp == y) continue;
        if (b * Rational(xp) + a * Rational(yp) <= best) return false;
    }
    return true;
}

}  // namespace ech
