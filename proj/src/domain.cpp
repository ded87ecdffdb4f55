#include "echcap/domain.hpp"

#include <algorithm>
#include <cctype>
#include <sstream>

#include "echcap/errors.hpp"

namespace ech {

namespace {

void require(bool ok, const std::string& why) {
    if (!ok) throw InvalidDomainError(why);
}

// Cross product of (b - a) and (c - b); negative means a right turn.
Rational turn(const Point& a, const Point& b, const Point& c) {
    return (b.x - a.x) * (c.y - b.y) - (b.y - a.y) * (c.x - b.x);
}

}  // namespace

ToricDomain ToricDomain::polydisk(const Rational& a, const Rational& b) {
    require(a.sign() > 0 && b.sign() > 0, "polydisk parameters must be positive");
    std::vector<Point> boundary{{Rational(0), b}, {a, b}, {a, Rational(0)}};
    return ToricDomain(DomainKind::polydisk, a, b, std::move(boundary));
}

ToricDomain ToricDomain::ellipsoid(const Rational& a, const Rational& b) {
    require(a.sign() > 0 && b.sign() > 0, "ellipsoid parameters must be positive");
    std::vector<Point> boundary{{Rational(0), b}, {a, Rational(0)}};
    return ToricDomain(DomainKind::ellipsoid, a, b, std::move(boundary));
}

ToricDomain ToricDomain::polygon(std::vector<Point> vertices) {
    require(vertices.size() >= 2, "polygon boundary needs at least two vertices");
    require(vertices.front().x.is_zero(), "polygon boundary must start on the y-axis");
    require(vertices.front().y.sign() > 0, "polygon height must be positive");
    require(vertices.back().y.is_zero(), "polygon boundary must end on the x-axis");
    require(vertices.back().x.sign() > 0, "polygon width must be positive");

    for (std::size_t i = 0; i + 1 < vertices.size(); ++i) {
        const auto& p = vertices[i];
        const auto& q = vertices[i + 1];
        require(p.x.sign() >= 0 && p.y.sign() >= 0, "polygon vertices must be in the first quadrant");
        require(q.x >= p.x, "polygon boundary must run left to right");
        require(q.y <= p.y, "polygon boundary must be nonincreasing");
        if (q.x == p.x) {
            require(i + 2 == vertices.size(), "only the final boundary segment may be vertical");
            require(q.y < p.y, "zero-length boundary segment");
        }
    }
    // Merge collinear interior vertices so that the chain is canonical.
    std::vector<Point> merged;
    merged.push_back(vertices.front());
    for (std::size_t i = 1; i + 1 < vertices.size(); ++i) {
        if (turn(merged.back(), vertices[i], vertices[i + 1]).is_zero()) continue;
        merged.push_back(vertices[i]);
    }
    merged.push_back(vertices.back());
    for (std::size_t i = 0; i + 2 < merged.size(); ++i) {
        require(turn(merged[i], merged[i + 1], merged[i + 2]).sign() < 0,
                "polygon boundary must be concave");
    }
    return ToricDomain(DomainKind::polygon, Rational(0), Rational(0), std::move(merged));
}

Rational ToricDomain::width() const {
    return boundary_.back().x;
}

Rational ToricDomain::height() const {
    return boundary_.front().y;
}

Rational ToricDomain::support(const Rational& u, const Rational& v) const {
    if (u.sign() < 0 || v.sign() < 0 || (u.is_zero() && v.is_zero())) {
        throw Error("support direction must be nonnegative and nonzero");
    }
    Rational best = boundary_.front().x * u + boundary_.front().y * v;
    for (std::size_t i = 1; i < boundary_.size(); ++i) {
        Rational value = boundary_[i].x * u + boundary_[i].y * v;
        if (value > best) best = value;
    }
    return best;
}

Rational ToricDomain::action(const ConvexGenerator& gen) const {
    Rational total(0);
    for (const auto& e : gen.edges()) {
        total += Rational(e.multiplicity) * support(Rational(e.dir.b), Rational(e.dir.a));
    }
    return total;
}

bool ToricDomain::contains(const ToricDomain& inner) const {
    // Support dominance on this domain's outward facet normals. The axis
    // half-planes hold automatically for first-quadrant regions.
    const auto dominated = [&](const Rational& u, const Rational& v) {
        return inner.support(u, v) <= support(u, v);
    };
    if (!dominated(Rational(1), Rational(0))) return false;
    if (!dominated(Rational(0), Rational(1))) return false;
    for (std::size_t i = 0; i + 1 < boundary_.size(); ++i) {
        const auto& p = boundary_[i];
        const auto& q = boundary_[i + 1];
        if (q.x == p.x) continue;  // vertical tail: covered by (1, 0)
        if (!dominated(p.y - q.y, q.x - p.x)) return false;
    }
    return true;
}

ToricDomain ToricDomain::scaled(const Rational& t) const {
    require(t.sign() > 0, "scale factor must be positive");
    switch (kind_) {
        case DomainKind::polydisk:
            return polydisk(a_ * t, b_ * t);
        case DomainKind::ellipsoid:
            return ellipsoid(a_ * t, b_ * t);
        case DomainKind::polygon: {
            std::vector<Point> scaled_boundary;
            scaled_boundary.reserve(boundary_.size());
            for (const auto& p : boundary_) scaled_boundary.push_back({p.x * t, p.y * t});
            return polygon(std::move(scaled_boundary));
        }
    }
    throw Error("unreachable");
}

Rational ToricDomain::area() const {
    Rational twice(0);
    for (std::size_t i = 0; i + 1 < boundary_.size(); ++i) {
        const auto& p = boundary_[i];
        const auto& q = boundary_[i + 1];
        twice += (q.x - p.x) * (p.y + q.y);
    }
    return twice / Rational(2);
}

std::pair<Rational, Rational> ToricDomain::inscribed_rectangle() const {
    switch (kind_) {
        case DomainKind::polydisk:
            return {a_, b_};
        case DomainKind::ellipsoid:
            return {a_ / Rational(2), b_ / Rational(2)};
        case DomainKind::polygon:
            break;
    }
    // Maximize w * f(w) over each boundary segment; the objective is
    // quadratic per segment, so the optimum sits at a vertex or at the
    // segment's interior critical point.
    Rational best_w = boundary_.back().x;
    Rational best_h = boundary_.back().y;
    Rational best_area = best_w * best_h;
    const auto consider = [&](const Rational& w, const Rational& h) {
        if (w.sign() <= 0 || h.sign() <= 0) return;
        Rational a = w * h;
        if (a > best_area) {
            best_area = a;
            best_w = w;
            best_h = h;
        }
    };
    for (std::size_t i = 0; i + 1 < boundary_.size(); ++i) {
        const auto& p = boundary_[i];
        const auto& q = boundary_[i + 1];
        consider(p.x, p.y);
        consider(q.x, q.y);
        if (q.x == p.x) continue;
        // f(w) = p.y + s (w - p.x) on [p.x, q.x]; d/dw [w f(w)] = 0 at
        // w* = (s p.x - p.y) / (2 s) when the segment slopes.
        Rational s = (q.y - p.y) / (q.x - p.x);
        if (s.is_zero()) continue;
        Rational w_star = (s * p.x - p.y) / (s * Rational(2));
        if (w_star > p.x && w_star < q.x) {
            consider(w_star, p.y + s * (w_star - p.x));
        }
    }
    require(best_area.sign() > 0, "domain has empty interior");
    return {best_w, best_h};
}

// ---------------------------------------------------------------------------
// Literal parsing and formatting

namespace {

struct DomainParser {
    std::string_view text;
    std::size_t i = 0;
    bool allow_var = false;
    bool saw_var = false;

    [[noreturn]] void fail(const std::string& why) const {
        throw ParseError("invalid domain '" + std::string(text) + "': " + why);
    }
    void skip_spaces() {
        while (i < text.size() && text[i] == ' ') ++i;
    }
    void expect(char c) {
        if (i >= text.size() || text[i] != c) fail(std::string("expected '") + c + "'");
        ++i;
    }
    bool peek_is(char c) {
        skip_spaces();
        return i < text.size() && text[i] == c;
    }

    // A rational literal, or the placeholder 'a' when allow_var is set.
    // Returns the literal text; 'a' stays symbolic.
    std::string component() {
        skip_spaces();
        if (allow_var && i < text.size() && text[i] == 'a') {
            ++i;
            saw_var = true;
            return "a";
        }
        std::size_t start = i;
        if (i < text.size() && (text[i] == '+' || text[i] == '-')) ++i;
        bool any = false;
        while (i < text.size() &&
               (std::isdigit(static_cast<unsigned char>(text[i])) || text[i] == '/' ||
                text[i] == '.')) {
            ++i;
            any = true;
        }
        if (!any) fail("expected rational component");
        return std::string(text.substr(start, i - start));
    }
};

struct DomainTemplate {
    DomainKind kind;
    std::vector<std::string> components;  // flat x/y list for polygon

    ToricDomain instantiate(const Rational& value) const {
        const auto get = [&](const std::string& c) {
            return c == "a" ? value : Rational::parse(c);
        };
        switch (kind) {
            case DomainKind::polydisk:
                return ToricDomain::polydisk(get(components[0]), get(components[1]));
            case DomainKind::ellipsoid:
                return ToricDomain::ellipsoid(get(components[0]), get(components[1]));
            case DomainKind::polygon:
                break;
        }
        std::vector<Point> vertices;
        for (std::size_t k = 0; k + 1 < components.size(); k += 2) {
            vertices.push_back({get(components[k]), get(components[k + 1])});
        }
        return ToricDomain::polygon(std::move(vertices));
    }
};

DomainTemplate parse_template(std::string_view text, bool allow_var) {
    DomainParser p{text, 0, allow_var, false};
    p.skip_spaces();
    if (p.i >= text.size()) p.fail("empty input");
    DomainTemplate tmpl;
    char tag = text[p.i];
    if (tag == 'P' || tag == 'E') {
        tmpl.kind = tag == 'P' ? DomainKind::polydisk : DomainKind::ellipsoid;
        ++p.i;
        p.expect('(');
        tmpl.components.push_back(p.component());
        p.skip_spaces();
        p.expect(',');
        tmpl.components.push_back(p.component());
        p.skip_spaces();
        p.expect(')');
    } else if (tag == 'B') {
        tmpl.kind = DomainKind::ellipsoid;
        ++p.i;
        p.expect('(');
        tmpl.components.push_back(p.component());
        p.skip_spaces();
        p.expect(')');
        tmpl.components.push_back(tmpl.components.front());
    } else if (text.substr(p.i, 4) == "poly") {
        tmpl.kind = DomainKind::polygon;
        p.i += 4;
        p.expect('[');
        while (true) {
            p.skip_spaces();
            p.expect('(');
            tmpl.components.push_back(p.component());
            p.skip_spaces();
            p.expect(',');
            tmpl.components.push_back(p.component());
            p.skip_spaces();
            p.expect(')');
            if (p.peek_is(',')) {
                ++p.i;
                continue;
            }
            break;
        }
        p.expect(']');
    } else {
        p.fail("expected P(...), E(...), B(...) or poly[...]");
    }
    p.skip_spaces();
    if (p.i != text.size()) p.fail("trailing input");
    return tmpl;
}

}  // namespace

ToricDomain ToricDomain::parse(std::string_view text) {
    return parse_template(text, /*allow_var=*/false).instantiate(Rational(0));
}

std::function<ToricDomain(const Rational&)> parse_domain_family(std::string_view text) {
    DomainTemplate tmpl = parse_template(text, /*allow_var=*/true);
    return [tmpl](const Rational& value) { return tmpl.instantiate(value); };
}

std::string ToricDomain::str() const {
    std::ostringstream out;
    switch (kind_) {
        case DomainKind::polydisk:
            out << "P(" << a_ << "," << b_ << ")";
            break;
        case DomainKind::ellipsoid:
            if (a_ == b_) {
                out << "B(" << a_ << ")";
            } else {
                out << "E(" << a_ << "," << b_ << ")";
            }
            break;
        case DomainKind::polygon: {
            out << "poly[";
            for (std::size_t i = 0; i < boundary_.size(); ++i) {
                if (i) out << ",";
                out << "(" << boundary_[i].x << "," << boundary_[i].y << ")";
            }
            out << "]";
            break;
        }
    }
    return out.str();
}

}  // namespace ech
