#include "echcap/bounds.hpp"

#include <algorithm>
#include <atomic>
#include <mutex>
#include <thread>

#include "echcap/capacity.hpp"
#include "echcap/errors.hpp"

namespace ech {

TargetFamily TargetFamily::parse(std::string_view text) {
    const auto colon = text.find(':');
    const std::string_view head = text.substr(0, colon);
    if (head == "ball") {
        if (colon != std::string_view::npos) throw ParseError("family 'ball' takes no ratio");
        return ball();
    }
    if (head == "square") {
        if (colon != std::string_view::npos) throw ParseError("family 'square' takes no ratio");
        return square_polydisk();
    }
    if (head == "ellipsoid" || head == "polydisk") {
        if (colon == std::string_view::npos) {
            throw ParseError("family '" + std::string(head) + "' needs a ratio, e.g. '" +
                             std::string(head) + ":2'");
        }
        const Rational b = Rational::parse(text.substr(colon + 1));
        if (b.sign() <= 0) throw ParseError("family ratio must be positive");
        return head == "ellipsoid" ? ellipsoid_ratio(b) : polydisk_ratio(b);
    }
    throw ParseError("unknown target family '" + std::string(text) +
                     "' (expected ball, ellipsoid:b, square, polydisk:b)");
}

std::string TargetFamily::str() const {
    switch (kind) {
        case Kind::ball:
            return "ball";
        case Kind::ellipsoid_ratio:
            return "ellipsoid:" + ratio.str();
        case Kind::square_polydisk:
            return "square";
        case Kind::polydisk_ratio:
            return "polydisk:" + ratio.str();
    }
    throw Error("unreachable");
}

ToricDomain TargetFamily::member(const Rational& c) const {
    switch (kind) {
        case Kind::ball:
            return ToricDomain::ball(c);
        case Kind::ellipsoid_ratio:
            return ToricDomain::ellipsoid(ratio * c, c);
        case Kind::square_polydisk:
            return ToricDomain::polydisk(c, c);
        case Kind::polydisk_ratio:
            return ToricDomain::polydisk(ratio * c, c);
    }
    throw Error("unreachable");
}

std::vector<ConvexGenerator> TargetFamily::target_recipe(int d_max) const {
    std::vector<ConvexGenerator> out;
    switch (kind) {
        case Kind::ball:
            for (int d = 1; d <= d_max; ++d) {
                out.push_back(ConvexGenerator::make({{Direction{1, 1}, d, 0}}));
            }
            return out;
        case Kind::ellipsoid_ratio: {
            if (!ratio.is_integer()) {
                throw Error("ellipsoid target recipe needs an integer ratio");
            }
            const std::int64_t b = ratio.floor_int64();
            for (int d = 1; d <= d_max; ++d) {
                out.push_back(ConvexGenerator::make({{Direction{b, 1}, d, 0}}));
            }
            return out;
        }
        case Kind::square_polydisk:
        case Kind::polydisk_ratio:
            break;
    }
    // Axis generators, kept only when minimal for the family (minimality is
    // scale-invariant, so test the member at c = 1).
    const ToricDomain probe = member(Rational(1));
    for (int d = 0; d <= d_max; ++d) {
        for (int k = 0; k <= d_max; ++k) {
            if (d == 0 && k == 0) continue;
            if (!is_minimal_polydisk(d, k, probe.param_a(), probe.param_b())) continue;
            std::vector<LabeledEdge> edges;
            if (d > 0) edges.push_back({Direction{1, 0}, d, 0});
            if (k > 0) edges.push_back({Direction{0, 1}, k, 0});
            out.push_back(ConvexGenerator::make(std::move(edges)));
        }
    }
    return out;
}

Rational TargetFamily::inclusion_scale(const ToricDomain& domain) const {
    const Rational width = domain.width();
    const Rational height = domain.height();
    switch (kind) {
        case Kind::ball:
            return domain.support(Rational(1), Rational(1));
        case Kind::ellipsoid_ratio:
            return std::max({width / ratio, height,
                             domain.support(Rational(1), ratio) / ratio});
        case Kind::square_polydisk:
            return std::max(width, height);
        case Kind::polydisk_ratio:
            return std::max(width / ratio, height);
    }
    throw Error("unreachable");
}

Rational y1_bound(const Rational& a, std::int64_t d) {
    if (d < 1) throw Error("degree must be positive");
    if (a < Rational(1)) throw Error("aspect must be at least 1");
    const Rational first = Rational(1) + a;
    const Rational second = (Rational(3 * d - 2) + a) / Rational(d);
    const Rational third = Rational(d + 3, 2);
    return std::min({first, second, third});
}

namespace {

struct VerdictProbe {
    const ToricDomain& domain;
    const TargetFamily& family;
    const std::vector<ConvexGenerator>& targets;
    const SearchOptions& options;
    int evaluations = 0;

    // excluded? plus the failing target when so.
    std::pair<bool, std::optional<ConvexGenerator>> operator()(const Rational& c) {
        ++evaluations;
        Verdict v = check_embedding(domain, family.member(c), targets, options);
        return {v.excluded, v.failing_target};
    }
};

}  // namespace

ThresholdResult exclusion_threshold(const ToricDomain& domain, const TargetFamily& family,
                                    const std::vector<ConvexGenerator>& targets,
                                    const Rational& tol, const SearchOptions& options) {
    if (tol.sign() <= 0) throw Error("tolerance must be positive");
    if (targets.empty()) throw Error("threshold search needs at least one target generator");
    VerdictProbe probe{domain, family, targets, options};

    // Upper end: inclusion guarantees a witness for every minimal target.
    Rational hi = family.inclusion_scale(domain);
    auto [hi_excluded, hi_fail] = probe(hi);
    for (int i = 0; hi_excluded; ++i) {
        if (i >= 16) throw NoBracketError("no non-excluded scale found above inclusion");
        hi = hi * Rational(2);
        std::tie(hi_excluded, hi_fail) = probe(hi);
    }
    // Lower end: hunt downward until the verdict flips to excluded.
    Rational lo = hi / Rational(2);
    ConvexGenerator binding;
    bool have_lo = false;
    for (int i = 0; i < 64; ++i) {
        auto [lo_excluded, lo_fail] = probe(lo);
        if (lo_excluded) {
            have_lo = true;
            binding = *lo_fail;
            break;
        }
        hi = lo;
        lo = lo / Rational(2);
    }
    if (!have_lo) {
        throw NoBracketError("no excluded scale found; the targets give no obstruction here");
    }

    const Rational lo0 = lo;
    const Rational hi0 = hi;
    while (hi - lo > tol) {
        // The simplest rational in the middle quarter: near-halving steps
        // whose denominators stay of the order of the bracket width.
        const Rational width = hi - lo;
        const Rational mid =
            simplest_between(lo + width * Rational(3, 8), hi - width * Rational(3, 8));
        auto [mid_excluded, mid_fail] = probe(mid);
        if (mid_excluded) {
            lo = mid;
            binding = *mid_fail;
        } else {
            hi = mid;
        }
    }
    const Rational threshold = (lo + hi) / Rational(2);

    // Return contract: the verdict really flips within tol of the reported
    // threshold, and interior probes of the initial bracket respect
    // monotonicity.
    std::vector<Rational> checks;
    checks.push_back(threshold - tol);
    checks.push_back(threshold + tol);
    for (int i = 1; i <= 3; ++i) {
        checks.push_back(lo0 + (hi0 - lo0) * Rational(i, 4));
    }
    for (const Rational& c : checks) {
        if (c.sign() <= 0) continue;
        if (c >= threshold - tol && c <= threshold + tol && !(c == threshold - tol) &&
            !(c == threshold + tol)) {
            continue;  // too close to the flip to classify
        }
        auto [excluded, fail] = probe(c);
        const bool expect_excluded = c <= threshold - tol;
        if (excluded != expect_excluded) {
            throw MonotonicityError("verdict not monotone at scale " + c.str() +
                                    " (threshold " + threshold.str() + ")");
        }
    }

    return {threshold, lo, hi, binding, probe.evaluations};
}

std::vector<ScanRow> scan(const std::function<ToricDomain(const Rational&)>& domain_family,
                          const std::vector<Rational>& grid, const TargetFamily& family,
                          int d_max, const Rational& tol, const SearchOptions& options,
                          int jobs) {
    const std::vector<ConvexGenerator> targets = family.target_recipe(d_max);
    std::vector<ScanRow> rows;
    rows.reserve(grid.size());
    for (const Rational& a : grid) {
        rows.push_back(ScanRow{a,
                               ThresholdResult{Rational(0), Rational(0), Rational(0),
                                               ConvexGenerator(), 0},
                               Rational(0), false});
    }

    std::atomic<std::size_t> next{0};
    std::exception_ptr first_error;
    std::mutex error_mutex;
    const auto worker = [&]() {
        while (true) {
            const std::size_t i = next.fetch_add(1);
            if (i >= grid.size()) return;
            try {
                const ToricDomain domain = domain_family(grid[i]);
                rows[i].bound = exclusion_threshold(domain, family, targets, tol, options);
                if (family.kind == TargetFamily::Kind::ball) {
                    rows[i].volume_floor_sq = Rational(2) * domain.area();
                    rows[i].threshold_meets_volume_floor =
                        rows[i].bound.threshold * rows[i].bound.threshold >=
                        rows[i].volume_floor_sq;
                }
            } catch (...) {
                std::lock_guard<std::mutex> lock(error_mutex);
                if (!first_error) first_error = std::current_exception();
                return;
            }
        }
    };

    const int thread_count = std::max(1, std::min<int>(jobs, static_cast<int>(grid.size())));
    if (thread_count == 1) {
        worker();
    } else {
        std::vector<std::thread> threads;
        threads.reserve(static_cast<std::size_t>(thread_count));
        for (int t = 0; t < thread_count; ++t) threads.emplace_back(worker);
        for (auto& th : threads) th.join();
    }
    if (first_error) std::rethrow_exception(first_error);
    return rows;
}

}  // namespace ech
