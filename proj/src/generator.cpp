#include "echcap/generator.hpp"

#include <algorithm>
#include <cctype>
#include <numeric>
#include <sstream>

#include "echcap/errors.hpp"

namespace ech {

namespace {

bool is_axis(const Direction& d) {
    return d.a == 0 || d.b == 0;
}

void validate_edge(const LabeledEdge& e, bool extended) {
    const auto& [a, b] = e.dir;
    if (a < 0 || b < 0 || (a == 0 && b == 0)) {
        throw InvalidEdgeError("direction must be a nonzero pair of nonnegative integers, got (" +
                               std::to_string(a) + "," + std::to_string(b) + ")");
    }
    if (std::gcd(a, b) != 1) {
        throw InvalidEdgeError("direction components must be coprime, got (" + std::to_string(a) +
                               "," + std::to_string(b) + ")");
    }
    if (e.multiplicity <= 0) {
        throw InvalidEdgeError("edge multiplicity must be positive");
    }
    if (e.h_exponent < 0 || e.h_exponent > e.multiplicity) {
        throw InvalidEdgeError("h exponent must lie in [0, multiplicity]");
    }
    if (!extended && e.h_exponent > 1) {
        throw InvalidEdgeError("no h factor may be repeated in a convex generator");
    }
    if (is_axis(e.dir) && e.h_exponent != 0) {
        throw InvalidEdgeError("horizontal and vertical edges can only be labeled e");
    }
}

}  // namespace

std::int64_t lattice_count_delta(const Direction& dir, std::int64_t m, std::int64_t x_before) {
    const std::int64_t a = dir.a;
    const std::int64_t b = dir.b;
    // New points: a column shift of b*m over the existing width, plus the
    // points under the appended segment itself (interior lattice geometry of
    // a primitive-direction run).
    return m * b * (x_before + 1) + m * a + m * ((a - 1) * (b - 1)) / 2 + a * b * (m * (m - 1)) / 2;
}

void ConvexGenerator::recompute() {
    x_ = y_ = m_ = h_ = 0;
    lattice_ = 1;
    for (const auto& e : edges_) {
        lattice_ += lattice_count_delta(e.dir, e.multiplicity, x_);
        x_ += e.multiplicity * e.dir.a;
        y_ += e.multiplicity * e.dir.b;
        m_ += e.multiplicity;
        h_ += e.h_exponent;
    }
}

ConvexGenerator ConvexGenerator::make(std::vector<LabeledEdge> edges, bool extended) {
    for (const auto& e : edges) {
        validate_edge(e, extended);
    }
    std::sort(edges.begin(), edges.end(),
              [](const LabeledEdge& l, const LabeledEdge& r) { return less_steep(l.dir, r.dir); });
    for (std::size_t i = 1; i < edges.size(); ++i) {
        if (edges[i - 1].dir == edges[i].dir) {
            throw InvalidEdgeError("duplicate edge direction (" + std::to_string(edges[i].dir.a) +
                                   "," + std::to_string(edges[i].dir.b) + ")");
        }
    }
    ConvexGenerator gen(extended);
    gen.edges_ = std::move(edges);
    gen.recompute();
    return gen;
}

std::int64_t ConvexGenerator::e_distinct() const {
    std::int64_t count = 0;
    for (const auto& e : edges_) {
        if (e.h_exponent < e.multiplicity) ++count;
    }
    return count;
}

std::int64_t ConvexGenerator::doubled_area() const {
    // Shoelace over the trapezoids below each edge, walking from (0, y).
    std::int64_t twice = 0;
    std::int64_t cy = y_;
    for (const auto& e : edges_) {
        const std::int64_t dx = e.multiplicity * e.dir.a;
        const std::int64_t dy = e.multiplicity * e.dir.b;
        twice += dx * (2 * cy - dy);
        cy -= dy;
    }
    return twice;
}

Rational ConvexGenerator::area_under() const {
    if (empty()) {
        throw EmptyGeneratorError("area_under of the empty generator");
    }
    return Rational(doubled_area(), 2);
}

std::int64_t lattice_count_by_columns(const ConvexGenerator& gen) {
    // floor(f(i)) + 1 summed over integer columns, computed straight from
    // the path geometry with integer arithmetic.
    std::int64_t total = gen.y() + 1;  // column 0
    std::int64_t px = 0;
    std::int64_t py = gen.y();
    for (const auto& e : gen.edges()) {
        const std::int64_t a = e.dir.a;
        const std::int64_t b = e.dir.b;
        if (a == 0) continue;  // the vertical tail adds no columns
        const std::int64_t run = e.multiplicity * a;
        for (std::int64_t t = 1; t <= run; ++t) {
            // f(px + t) = py - t*b/a, floored.
            std::int64_t num = py * a - t * b;
            std::int64_t fl = num >= 0 ? num / a : -((-num + a - 1) / a);
            total += fl + 1;
        }
        px += run;
        py -= e.multiplicity * b;
    }
    return total;
}

ConvexGenerator ConvexGenerator::operator*(const ConvexGenerator& other) const {
    const bool extended = extended_ || other.extended_;
    std::vector<LabeledEdge> merged;
    merged.reserve(edges_.size() + other.edges_.size());
    auto it = edges_.begin();
    auto jt = other.edges_.begin();
    while (it != edges_.end() || jt != other.edges_.end()) {
        if (jt == other.edges_.end() || (it != edges_.end() && less_steep(it->dir, jt->dir))) {
            merged.push_back(*it++);
        } else if (it == edges_.end() || less_steep(jt->dir, it->dir)) {
            merged.push_back(*jt++);
        } else {
            if (!extended && it->h_exponent >= 1 && jt->h_exponent >= 1) {
                throw SharedHyperbolicError("product undefined: both factors carry h(" +
                                            std::to_string(it->dir.a) + "," +
                                            std::to_string(it->dir.b) + ")");
            }
            merged.push_back({it->dir, it->multiplicity + jt->multiplicity,
                              it->h_exponent + jt->h_exponent});
            ++it;
            ++jt;
        }
    }
    ConvexGenerator out(extended);
    out.edges_ = std::move(merged);
    out.recompute();
    return out;
}

bool operator<(const ConvexGenerator& a, const ConvexGenerator& b) {
    const auto cmp = [](const LabeledEdge& l, const LabeledEdge& r) {
        if (l.dir != r.dir) return less_steep(l.dir, r.dir);
        if (l.multiplicity != r.multiplicity) return l.multiplicity < r.multiplicity;
        return l.h_exponent < r.h_exponent;
    };
    return std::lexicographical_compare(a.edges().begin(), a.edges().end(), b.edges().begin(),
                                        b.edges().end(), cmp);
}

bool shares_elliptic_orbit(const ConvexGenerator& a, const ConvexGenerator& b) {
    for (const auto& ea : a.edges()) {
        if (ea.h_exponent >= ea.multiplicity) continue;
        for (const auto& eb : b.edges()) {
            if (eb.dir == ea.dir && eb.h_exponent < eb.multiplicity) return true;
        }
    }
    return false;
}

bool shares_hyperbolic_orbit(const ConvexGenerator& a, const ConvexGenerator& b) {
    for (const auto& ea : a.edges()) {
        if (ea.h_exponent == 0) continue;
        for (const auto& eb : b.edges()) {
            if (eb.dir == ea.dir && eb.h_exponent > 0) return true;
        }
    }
    return false;
}

// ---------------------------------------------------------------------------
// Formal product text form

ConvexGenerator ConvexGenerator::parse(std::string_view text, bool extended) {
    std::size_t i = 0;
    const auto skip_spaces = [&] {
        while (i < text.size() && text[i] == ' ') ++i;
    };
    const auto fail = [&](const std::string& why) -> std::int64_t {
        throw ParseError("invalid generator '" + std::string(text) + "': " + why);
    };
    const auto parse_int = [&]() -> std::int64_t {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) ++i;
        if (i == start || i - start > 18) return fail("expected integer");
        return std::stoll(std::string(text.substr(start, i - start)));
    };

    skip_spaces();
    if (i >= text.size()) fail("empty input");
    if (text[i] == '1') {
        ++i;
        skip_spaces();
        if (i != text.size()) fail("trailing input after '1'");
        return ConvexGenerator(extended);
    }

    // Accumulate exponents of e and h per direction.
    struct Exps {
        std::int64_t e = 0;
        std::int64_t h = 0;
    };
    std::vector<std::pair<Direction, Exps>> factors;
    while (i < text.size()) {
        char kind = text[i];
        if (kind != 'e' && kind != 'h') fail("expected factor 'e(...)' or 'h(...)'");
        ++i;
        if (i >= text.size() || text[i] != '(') fail("expected '('");
        ++i;
        std::int64_t a = parse_int();
        if (i >= text.size() || text[i] != ',') fail("expected ','");
        ++i;
        std::int64_t b = parse_int();
        if (i >= text.size() || text[i] != ')') fail("expected ')'");
        ++i;
        std::int64_t exp = 1;
        if (i < text.size() && text[i] == '^') {
            ++i;
            exp = parse_int();
            if (exp <= 0) fail("exponent must be positive");
        }
        Direction dir{a, b};
        auto it = std::find_if(factors.begin(), factors.end(),
                               [&](const auto& f) { return f.first == dir; });
        if (it == factors.end()) {
            factors.push_back({dir, {}});
            it = factors.end() - 1;
        }
        (kind == 'e' ? it->second.e : it->second.h) += exp;
        if (i < text.size()) {
            if (text[i] != ' ') fail("factors must be separated by spaces");
            skip_spaces();
            if (i >= text.size()) fail("trailing space");
        }
    }

    std::vector<LabeledEdge> edges;
    edges.reserve(factors.size());
    for (const auto& [dir, exps] : factors) {
        edges.push_back({dir, exps.e + exps.h, exps.h});
    }
    return make(std::move(edges), extended);
}

std::string ConvexGenerator::str() const {
    if (empty()) return "1";
    std::ostringstream out;
    bool first = true;
    const auto piece = [&](char kind, const Direction& d, std::int64_t exp) {
        if (exp == 0) return;
        if (!first) out << ' ';
        first = false;
        out << kind << '(' << d.a << ',' << d.b << ')';
        if (exp > 1) out << '^' << exp;
    };
    for (const auto& e : edges_) {
        piece('e', e.dir, e.multiplicity - e.h_exponent);
        piece('h', e.dir, e.h_exponent);
    }
    return out.str();
}

// ---------------------------------------------------------------------------
// Factorization streams

namespace {

// All nonempty sub-generators of gen whose complement stays valid, in
// ascending canonical order.
std::vector<ConvexGenerator> divisors(const ConvexGenerator& gen) {
    const auto edges = gen.edges();
    std::vector<ConvexGenerator> out;
    std::vector<LabeledEdge> partial;
    const bool extended = gen.extended();

    const std::function<void(std::size_t)> walk = [&](std::size_t idx) {
        if (idx == edges.size()) {
            if (!partial.empty()) {
                out.push_back(ConvexGenerator::make(partial, extended));
            }
            return;
        }
        const auto& e = edges[idx];
        for (std::int64_t m = 0; m <= e.multiplicity; ++m) {
            const std::int64_t h_lo = std::max<std::int64_t>(
                0, e.h_exponent - (e.multiplicity - m));
            const std::int64_t h_hi = std::min<std::int64_t>(
                e.h_exponent, extended ? m : std::min<std::int64_t>(m, 1));
            for (std::int64_t h = h_lo; h <= h_hi; ++h) {
                if (m == 0 && h > 0) continue;
                if (m > 0) partial.push_back({e.dir, m, h});
                walk(idx + 1);
                if (m > 0) partial.pop_back();
            }
        }
    };
    walk(0);
    std::sort(out.begin(), out.end());
    return out;
}

ConvexGenerator subtract(const ConvexGenerator& gen, const ConvexGenerator& part) {
    std::vector<LabeledEdge> rest;
    auto pit = part.edges().begin();
    for (const auto& e : gen.edges()) {
        std::int64_t m = e.multiplicity;
        std::int64_t h = e.h_exponent;
        if (pit != part.edges().end() && pit->dir == e.dir) {
            m -= pit->multiplicity;
            h -= pit->h_exponent;
            ++pit;
        }
        if (m > 0) rest.push_back({e.dir, m, h});
    }
    return ConvexGenerator::make(std::move(rest), gen.extended());
}

bool emit_factorizations(const ConvexGenerator& remaining, int left,
                         const ConvexGenerator& lower_bound, std::vector<ConvexGenerator>& stack,
                         const std::function<bool(std::span<const ConvexGenerator>)>& visit) {
    if (left == 1) {
        if (remaining.empty() || remaining < lower_bound) return true;
        stack.push_back(remaining);
        const bool keep_going = visit(stack);
        stack.pop_back();
        return keep_going;
    }
    for (const auto& d : divisors(remaining)) {
        if (d < lower_bound) continue;
        const ConvexGenerator rest = subtract(remaining, d);
        if (rest.total_multiplicity() < left - 1) continue;
        stack.push_back(d);
        const bool keep_going = emit_factorizations(rest, left - 1, d, stack, visit);
        stack.pop_back();
        if (!keep_going) return false;
    }
    return true;
}

}  // namespace

void for_each_factorization(const ConvexGenerator& gen, int n,
                            const std::function<bool(std::span<const ConvexGenerator>)>& visit) {
    if (n == 0) {
        if (gen.empty()) visit({});
        return;
    }
    if (n < 0 || gen.empty() || gen.total_multiplicity() < n) return;
    std::vector<ConvexGenerator> stack;
    stack.reserve(static_cast<std::size_t>(n));
    emit_factorizations(gen, n, ConvexGenerator(gen.extended()), stack, visit);
}

std::vector<std::vector<ConvexGenerator>> factorizations(const ConvexGenerator& gen, int n) {
    std::vector<std::vector<ConvexGenerator>> out;
    for_each_factorization(gen, n, [&](std::span<const ConvexGenerator> tuple) {
        out.emplace_back(tuple.begin(), tuple.end());
        return true;
    });
    return out;
}

}  // namespace ech
