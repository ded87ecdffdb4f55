#include <doctest.h>

#include "echcap/domain.hpp"
#include "echcap/errors.hpp"
#include "test_util.hpp"

using namespace ech;

namespace {

Rational q(const std::string& text) { return Rational::parse(text); }

// Tangent-line value for an ellipsoid: max of b*px + a*py over the path's
// vertices. An independent route to the ellipsoid action.
Rational ellipsoid_tangent_value(const Rational& a, const Rational& b,
                                 const ConvexGenerator& g) {
    Rational px(0);
    Rational py(g.y());
    Rational best = b * px + a * py;
    for (const auto& e : g.edges()) {
        px += Rational(e.multiplicity * e.dir.a);
        py -= Rational(e.multiplicity * e.dir.b);
        const Rational v = b * px + a * py;
        if (v > best) best = v;
    }
    return best;
}

}  // namespace

TEST_CASE("support closed forms") {
    const auto p = ToricDomain::polydisk(q("5/2"), q("1"));
    CHECK(p.support(3, 4) == Rational(3) * q("5/2") + Rational(4));
    CHECK(p.support(1, 0) == q("5/2"));  // horizontal extent
    const auto ball = ToricDomain::ball(q("3"));
    CHECK(ball.support(1, 1) == Rational(3));
    const auto e = ToricDomain::ellipsoid(q("2"), q("1"));
    CHECK(e.support(1, 0) == Rational(2));
    CHECK(e.support(0, 1) == Rational(1));
    CHECK(e.support(1, 2) == Rational(2));
    CHECK_THROWS_AS(p.support(0, 0), Error);
}

TEST_CASE("polydisk action is b*x + a*y") {
    testutil::GeneratorSampler sampler(11);
    const Rational a = q("5/2");
    const Rational b = q("4/3");
    const auto p = ToricDomain::polydisk(a, b);
    for (int i = 0; i < 200; ++i) {
        const auto g = sampler.next();
        CHECK(p.action(g) == b * Rational(g.x()) + a * Rational(g.y()));
    }
    CHECK(p.action(ConvexGenerator()) == Rational(0));
}

TEST_CASE("ellipsoid action equals the tangent-line value") {
    testutil::GeneratorSampler sampler(12);
    const Rational a = q("7/3");
    const Rational b = q("3/2");
    const auto e = ToricDomain::ellipsoid(a, b);
    for (int i = 0; i < 200; ++i) {
        const auto g = sampler.next();
        CHECK(e.action(g) == ellipsoid_tangent_value(a, b, g));
    }
}

TEST_CASE("reference actions") {
    for (std::int64_t d = 1; d <= 5; ++d) {
        const auto diag = ConvexGenerator::make({{Direction{1, 1}, d, 0}});
        CHECK(ToricDomain::ball(q("3")).action(diag) == Rational(d) * Rational(3));
    }
    // A horizontal path of length d(d+3)/2 against P(a,1).
    const std::int64_t d = 4;
    const auto flat = ConvexGenerator::make({{Direction{1, 0}, d * (d + 3) / 2, 0}});
    CHECK(ToricDomain::polydisk(q("2"), q("1")).action(flat) == Rational(d * (d + 3) / 2));
}

TEST_CASE("containment") {
    const auto p11 = ToricDomain::polydisk(1, 1);
    const auto p22 = ToricDomain::polydisk(2, 2);
    CHECK(p22.contains(p11));
    CHECK(!p11.contains(p22));
    CHECK(ToricDomain::ball(q("2")).contains(p11));      // corner (1,1) on x+y=2
    CHECK(!ToricDomain::ball(q("199/100")).contains(p11));
    CHECK(ToricDomain::ellipsoid(4, 2).contains(ToricDomain::ellipsoid(4, 2)));
    CHECK(ToricDomain::polydisk(q("2"), q("1")).contains(
        ToricDomain::polygon({{q("0"), q("1")}, {q("1"), q("1")}, {q("2"), q("0")}})));
}

TEST_CASE("containment implies action dominance") {
    testutil::GeneratorSampler sampler(13);
    const auto inner = ToricDomain::ellipsoid(q("3/2"), q("1"));
    const auto outer = ToricDomain::polydisk(q("3/2"), q("1"));  // triangle inside rectangle
    REQUIRE(outer.contains(inner));
    for (int i = 0; i < 200; ++i) {
        const auto g = sampler.next();
        CHECK(inner.action(g) <= outer.action(g));
    }
}

TEST_CASE("scaling") {
    const auto e = ToricDomain::ellipsoid(q("5/2"), q("1"));
    const auto scaled = e.scaled(q("3"));
    CHECK(scaled.param_a() == q("15/2"));
    CHECK(scaled.param_b() == q("3"));
    testutil::GeneratorSampler sampler(14);
    for (int i = 0; i < 100; ++i) {
        const auto g = sampler.next();
        CHECK(scaled.action(g) == Rational(3) * e.action(g));
    }
}

TEST_CASE("area") {
    CHECK(ToricDomain::ellipsoid(q("3"), q("2")).area() == Rational(3));
    CHECK(ToricDomain::polydisk(q("5/2"), q("1")).area() == q("5/2"));
    const auto poly = ToricDomain::polygon(
        {{q("0"), q("2")}, {q("1"), q("2")}, {q("2"), q("1")}, {q("2"), q("0")}});
    CHECK(poly.area() == q("7/2"));
}

TEST_CASE("action is additive over products") {
    testutil::GeneratorSampler sampler(15, 3, 3, 4, false);
    const auto dom = ToricDomain::polygon(
        {{q("0"), q("2")}, {q("1"), q("2")}, {q("3"), q("1")}, {q("4"), q("0")}});
    for (int i = 0; i < 100; ++i) {
        const auto a = sampler.next();
        const auto b = sampler.next();
        CHECK(dom.action(a * b) == dom.action(a) + dom.action(b));
    }
}

TEST_CASE("inscribed rectangle sits inside and bounds the action") {
    const std::vector<ToricDomain> domains = {
        ToricDomain::polydisk(q("5/2"), q("1")),
        ToricDomain::ellipsoid(q("3"), q("2")),
        ToricDomain::ball(q("2")),
        ToricDomain::polygon({{q("0"), q("2")}, {q("1"), q("2")}, {q("2"), q("1")},
                              {q("3"), q("0")}}),
        ToricDomain::polygon({{q("0"), q("3")}, {q("2"), q("0")}}),
    };
    testutil::GeneratorSampler sampler(16);
    for (const auto& dom : domains) {
        const auto [w, h] = dom.inscribed_rectangle();
        CHECK(w.sign() > 0);
        CHECK(h.sign() > 0);
        CHECK(dom.contains(ToricDomain::polydisk(w, h)));
        for (int i = 0; i < 50; ++i) {
            const auto g = sampler.next();
            CHECK(dom.action(g) >= h * Rational(g.x()) + w * Rational(g.y()));
        }
    }
}

TEST_CASE("domain literals parse and print") {
    CHECK(ToricDomain::parse("P(2,1)").str() == "P(2,1)");
    CHECK(ToricDomain::parse("B(299/100)").str() == "B(299/100)");
    CHECK(ToricDomain::parse("E(3,3)").str() == "B(3)");
    CHECK(ToricDomain::parse("E(5/2, 1)").str() == "E(5/2,1)");
    CHECK(ToricDomain::parse("P(1.5, 1)").param_a() == q("3/2"));
    CHECK(ToricDomain::parse("poly[(0,1),(1,1),(2,0)]").area() == q("3/2"));
    CHECK_THROWS_AS(ToricDomain::parse("Q(1,1)"), ParseError);
    CHECK_THROWS_AS(ToricDomain::parse("P(1)"), ParseError);
    CHECK_THROWS_AS(ToricDomain::parse("P(0,1)"), InvalidDomainError);
}

TEST_CASE("degenerate or nonconcave polygons are rejected") {
    CHECK_THROWS_AS(ToricDomain::polygon({{q("0"), q("0")}, {q("1"), q("0")}}),
                    InvalidDomainError);  // zero height
    CHECK_THROWS_AS(
        ToricDomain::polygon({{q("0"), q("2")}, {q("1"), q("0")}, {q("2"), q("0")}}),
        InvalidDomainError);  // not strictly concave after the drop
    CHECK_THROWS_AS(
        ToricDomain::polygon({{q("0"), q("1")}, {q("1"), q("2")}, {q("2"), q("0")}}),
        InvalidDomainError);  // increasing
    CHECK_THROWS_AS(ToricDomain::polygon({{q("0"), q("1")}, {q("0"), q("0")}}),
                    InvalidDomainError);  // zero width
}

TEST_CASE("domain family parsing") {
    const auto family = parse_domain_family("P(a,1)");
    CHECK(family(q("3/2")) == ToricDomain::polydisk(q("3/2"), q("1")));
    CHECK(family(q("2")) == ToricDomain::polydisk(q("2"), q("1")));
    const auto fixed = parse_domain_family("B(3)");
    CHECK(fixed(q("7")) == ToricDomain::ball(q("3")));
}
