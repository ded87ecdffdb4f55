#pragma once

#include <cstdint>
#include <functional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "echcap/rational.hpp"

namespace ech {

/// Primitive edge direction (a, b) with a, b >= 0 coprime and not both zero.
/// The geometric edge vector of one step is (a, -b): (1, 0) is horizontal,
/// (0, 1) vertical. Steepness b/a orders edges along a convex path.
struct Direction {
    std::int64_t a = 0;
    std::int64_t b = 0;

    friend bool operator==(const Direction&, const Direction&) = default;
};

/// Strict steepness order by b/a, compared via cross products so that no
/// floating slopes ever appear: (1,0) sorts first, (0,1) last.
inline bool steeper(const Direction& lhs, const Direction& rhs) {
    return lhs.b * rhs.a > rhs.b * lhs.a;
}
inline bool less_steep(const Direction& lhs, const Direction& rhs) {
    return lhs.b * rhs.a < rhs.b * lhs.a;
}

/// One edge of a convex generator: direction, total multiplicity m >= 1 and
/// hyperbolic exponent 0 <= h <= m. As a formal product the edge reads
/// e^(m-h) h^(h) in its direction. Plain (non-extended) generators restrict
/// h to {0, 1}, and axis-parallel edges always carry h = 0.
struct LabeledEdge {
    Direction dir;
    std::int64_t multiplicity = 1;
    std::int64_t h_exponent = 0;

    friend bool operator==(const LabeledEdge&, const LabeledEdge&) = default;
};

/// A convex integral path with labeled edges, stored canonically: edges
/// sorted by strictly increasing steepness, one edge per direction. The
/// empty product "1" is a first-class value (the unique index-0 generator).
class ConvexGenerator {
public:
    /// The empty generator "1".
    explicit ConvexGenerator(bool extended = false) : extended_(extended) {}

    /// Validates and canonicalizes raw edges. Throws InvalidEdgeError naming
    /// the violated invariant.
    static ConvexGenerator make(std::vector<LabeledEdge> edges, bool extended = false);

    /// Parses the formal-product grammar:
    ///   term   := "1" | factor (" " factor)*
    ///   factor := ("e"|"h") "(" int "," int ")" ["^" int]
    /// Repeated factors in the same direction accumulate. Throws ParseError
    /// on bad syntax and InvalidEdgeError on invariant violations (for
    /// example a repeated h factor outside extended mode).
    static ConvexGenerator parse(std::string_view text, bool extended = false);

    /// Canonical text form: factors by increasing steepness, "e" before "h"
    /// within a direction, "^1" omitted; the empty generator prints as "1".
    std::string str() const;

    std::span<const LabeledEdge> edges() const { return edges_; }
    bool extended() const { return extended_; }
    bool empty() const { return edges_.empty(); }

    std::int64_t x() const { return x_; }
    std::int64_t y() const { return y_; }
    /// m: total multiplicity, i.e. lattice points on the path minus one.
    std::int64_t total_multiplicity() const { return m_; }
    /// h: total hyperbolic exponent over all edges.
    std::int64_t h_count() const { return h_; }
    /// e: number of edges with h_exponent < multiplicity, i.e. the number of
    /// distinct elliptic factors in the formal product.
    std::int64_t e_distinct() const;
    /// L: lattice points enclosed by the path and the axes, boundary included.
    std::int64_t lattice_count() const { return lattice_; }
    /// ECH index I = 2(L - 1) - h.
    std::int64_t ech_index() const { return 2 * (lattice_ - 1) - h_; }
    /// J0 = I - 2x - 2y - e.
    std::int64_t j_zero() const { return ech_index() - 2 * x_ - 2 * y_ - e_distinct(); }

    bool all_elliptic() const { return h_ == 0; }

    /// Exact area between the path and the axes, by the shoelace rule.
    /// Throws EmptyGeneratorError on "1".
    Rational area_under() const;
    /// Twice the area, as an integer (defined for every generator).
    std::int64_t doubled_area() const;

    /// Formal product: multiplicities and h exponents add per direction.
    /// Throws SharedHyperbolicError when both sides carry an h factor in the
    /// same direction and neither operand is extended.
    ConvexGenerator operator*(const ConvexGenerator& other) const;

    friend bool operator==(const ConvexGenerator& a, const ConvexGenerator& b) {
        return a.edges_ == b.edges_;
    }
    /// Total order used for canonical factorization streams.
    friend bool operator<(const ConvexGenerator& a, const ConvexGenerator& b);

private:
    std::vector<LabeledEdge> edges_;
    bool extended_ = false;
    std::int64_t x_ = 0;
    std::int64_t y_ = 0;
    std::int64_t m_ = 0;
    std::int64_t h_ = 0;
    std::int64_t lattice_ = 1;

    void recompute();
};

/// Lattice points added to L when an edge is appended at the steep end of a
/// path whose current width is x_before. Closed form, O(1).
std::int64_t lattice_count_delta(const Direction& dir, std::int64_t multiplicity,
                                 std::int64_t x_before);

/// Independent O(width) cross-check of lattice_count: sums floor(f(i)) + 1
/// over integer columns i of the enclosed region.
std::int64_t lattice_count_by_columns(const ConvexGenerator& gen);

/// True when some direction carries an elliptic factor (m - h >= 1) in both
/// generators.
bool shares_elliptic_orbit(const ConvexGenerator& a, const ConvexGenerator& b);
/// True when some direction carries an h factor in both generators.
bool shares_hyperbolic_orbit(const ConvexGenerator& a, const ConvexGenerator& b);

/// Streams every unordered factorization of gen into n nonempty factors,
/// each tuple in nondecreasing factor order, the stream itself in
/// lexicographic order and duplicate-free by construction. The callback may
/// return false to stop early. Infeasible inputs yield an empty stream.
void for_each_factorization(const ConvexGenerator& gen, int n,
                            const std::function<bool(std::span<const ConvexGenerator>)>& visit);

/// Convenience collector for for_each_factorization.
std::vector<std::vector<ConvexGenerator>> factorizations(const ConvexGenerator& gen, int n);

}  // namespace ech
