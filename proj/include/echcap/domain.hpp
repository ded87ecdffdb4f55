#pragma once

#include <functional>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "echcap/generator.hpp"
#include "echcap/rational.hpp"

namespace ech {

struct Point {
    Rational x;
    Rational y;

    friend bool operator==(const Point& a, const Point& b) { return a.x == b.x && a.y == b.y; }
};

enum class DomainKind { polydisk, ellipsoid, polygon };

/// A convex toric domain: the region under a nonincreasing concave
/// piecewise-linear upper boundary in the first quadrant. Polydisks are the
/// rectangle case, ellipsoids the triangle case; general polygons carry the
/// boundary vertex chain explicitly. All data is exact rational and the
/// domain must have nonempty interior (width and height positive).
class ToricDomain {
public:
    static ToricDomain polydisk(const Rational& a, const Rational& b);
    static ToricDomain ellipsoid(const Rational& a, const Rational& b);
    static ToricDomain ball(const Rational& c) { return ellipsoid(c, c); }
    /// Upper boundary from (0, f(0)) to (A, 0), left to right. Collinear
    /// interior vertices are merged; anything non-concave, increasing, or
    /// degenerate is rejected with InvalidDomainError.
    static ToricDomain polygon(std::vector<Point> vertices);

    /// Literal syntax: "P(a,b)", "E(a,b)", "B(c)" (= E(c,c)),
    /// "poly[(x0,y0),...]"; rational components as "p/q", integers or finite
    /// decimals.
    static ToricDomain parse(std::string_view text);
    std::string str() const;

    DomainKind kind() const { return kind_; }
    /// Defining parameters for polydisk/ellipsoid kinds.
    const Rational& param_a() const { return a_; }
    const Rational& param_b() const { return b_; }

    /// Horizontal extent A and height f(0).
    Rational width() const;
    Rational height() const;

    /// Upper boundary chain from (0, f(0)) to (A, 0), every kind.
    const std::vector<Point>& boundary() const { return boundary_; }

    /// max over the domain of u*x + v*y, for (u, v) >= 0, (u, v) != 0.
    /// This is the constant of the tangent line with outward normal (u, v).
    Rational support(const Rational& u, const Rational& v) const;

    /// Symplectic action of a generator: sum over edges of
    /// multiplicity * support(b, a) for edge direction (a, b). The action of
    /// the empty generator is 0.
    Rational action(const ConvexGenerator& gen) const;

    /// Exact decision of inner <= *this, via support dominance on this
    /// domain's outward edge normals.
    bool contains(const ToricDomain& inner) const;

    ToricDomain scaled(const Rational& t) const;
    Rational area() const;

    /// A maximal axis-aligned corner rectangle [0,w] x [0,h] inside the
    /// domain; both sides positive. Drives the search-space bounds:
    /// action(gen) >= h*x(gen) + w*y(gen).
    std::pair<Rational, Rational> inscribed_rectangle() const;

    friend bool operator==(const ToricDomain& a, const ToricDomain& b) {
        return a.boundary_ == b.boundary_;
    }

private:
    ToricDomain(DomainKind kind, Rational a, Rational b, std::vector<Point> boundary)
        : kind_(kind), a_(std::move(a)), b_(std::move(b)), boundary_(std::move(boundary)) {}

    DomainKind kind_;
    Rational a_;
    Rational b_;
    std::vector<Point> boundary_;
};

/// Parses a domain literal in which the letter 'a' may stand in for any
/// rational component; returns a closure producing the domain at a given
/// value of a. Used by parameter scans.
std::function<ToricDomain(const Rational&)> parse_domain_family(std::string_view text);

}  // namespace ech
