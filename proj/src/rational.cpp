#include "echcap/rational.hpp"

#include <cctype>
#include <limits>
#include <ostream>

#include "echcap/errors.hpp"

namespace ech {

namespace {

mpz_class mpz_from_ll(long long n) {
    // mpz_class has no long long constructor on LP64-agnostic paths; go
    // through a decimal string to stay portable.
    return mpz_class(std::to_string(n));
}

std::int64_t mpz_to_int64(const mpz_class& z) {
    if (!z.fits_slong_p()) {
        throw Error("integer value out of int64 range: " + z.get_str());
    }
    return static_cast<std::int64_t>(z.get_si());
}

}  // namespace

Rational::Rational(long long n) : v_(mpz_from_ll(n)) {}

Rational::Rational(long long num, long long den) {
    if (den == 0) {
        throw Error("rational with zero denominator");
    }
    v_ = mpq_class(mpz_from_ll(num), mpz_from_ll(den));
    v_.canonicalize();
}

Rational::Rational(const mpq_class& v) : v_(v) {
    v_.canonicalize();
}

Rational& Rational::operator/=(const Rational& o) {
    if (o.is_zero()) {
        throw Error("rational division by zero");
    }
    v_ /= o.v_;
    return *this;
}

Rational Rational::parse(std::string_view text) {
    std::size_t i = 0;
    auto fail = [&]() -> Rational {
        throw ParseError("invalid rational literal: '" + std::string(text) + "'");
    };
    if (text.empty()) return fail();

    bool negative = false;
    if (text[i] == '+' || text[i] == '-') {
        negative = text[i] == '-';
        ++i;
    }
    auto digits = [&](std::string& out) {
        std::size_t start = i;
        while (i < text.size() && std::isdigit(static_cast<unsigned char>(text[i]))) {
            out.push_back(text[i++]);
        }
        return i > start;
    };

    std::string intpart;
    if (!digits(intpart)) return fail();

    mpq_class value;
    if (i < text.size() && text[i] == '/') {
        ++i;
        std::string denpart;
        if (!digits(denpart) || i != text.size()) return fail();
        mpz_class den(denpart);
        if (den == 0) throw ParseError("rational literal with zero denominator: '" + std::string(text) + "'");
        value = mpq_class(mpz_class(intpart), den);
    } else if (i < text.size() && text[i] == '.') {
        ++i;
        std::string fracpart;
        if (!digits(fracpart) || i != text.size()) return fail();
        mpz_class scaled(intpart + fracpart);
        mpz_class den(1);
        for (std::size_t k = 0; k < fracpart.size(); ++k) den *= 10;
        value = mpq_class(scaled, den);
    } else if (i == text.size()) {
        value = mpq_class(mpz_class(intpart));
    } else {
        return fail();
    }
    value.canonicalize();
    if (negative) value = -value;
    return Rational(value);
}

std::string Rational::str() const {
    if (v_.get_den() == 1) {
        return v_.get_num().get_str();
    }
    return v_.get_num().get_str() + "/" + v_.get_den().get_str();
}

std::int64_t Rational::floor_int64() const {
    mpz_class q;
    mpz_fdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return mpz_to_int64(q);
}

std::int64_t Rational::ceil_int64() const {
    mpz_class q;
    mpz_cdiv_q(q.get_mpz_t(), v_.get_num().get_mpz_t(), v_.get_den().get_mpz_t());
    return mpz_to_int64(q);
}

std::ostream& operator<<(std::ostream& os, const Rational& r) {
    return os << r.str();
}

namespace {

// Simplest rational in the open interval (0, hi), hi > 0: the fraction 1/q
// with the smallest workable q, or 1 itself when the interval allows it.
mpq_class simplest_above_zero(const mpq_class& hi) {
    if (hi > 1) {
        return {1};
    }
    mpz_class n;  // 1/(n+1) < hi <= 1/n
    mpz_fdiv_q(n.get_mpz_t(), hi.get_den().get_mpz_t(), hi.get_num().get_mpz_t());
    return mpq_class(mpz_class(1), n + 1);
}

// Stern-Brocot descent for the simplest rational in the open interval
// (lo, hi), assuming 0 <= lo < hi.
mpq_class simplest_nonneg(const mpq_class& lo, const mpq_class& hi) {
    if (sgn(lo) == 0) {
        return simplest_above_zero(hi);
    }
    mpz_class fl;
    mpz_fdiv_q(fl.get_mpz_t(), lo.get_num().get_mpz_t(), lo.get_den().get_mpz_t());
    mpq_class next_int(fl + 1);
    if (next_int < hi) {
        return next_int;  // an integer fits strictly inside
    }
    mpq_class lo_frac = lo - mpq_class(fl);
    mpq_class hi_frac = hi - mpq_class(fl);
    if (sgn(lo_frac) == 0) {
        // lo is an integer and hi <= lo + 1: shift into (0, hi_frac).
        return mpq_class(fl) + simplest_above_zero(hi_frac);
    }
    // Both bounds lie strictly inside (fl, fl+1]; recurse on reciprocals of
    // the fractional parts (the reciprocal map reverses the interval).
    mpq_class inner = simplest_nonneg(1 / hi_frac, 1 / lo_frac);
    return mpq_class(fl) + 1 / inner;
}

}  // namespace

Rational simplest_between(const Rational& lo, const Rational& hi) {
    if (!(lo < hi)) {
        throw Error("simplest_between requires lo < hi");
    }
    if (lo.sign() < 0 && hi.sign() > 0) return Rational(0);
    if (hi.sign() <= 0) {
        return -simplest_between(-hi, -lo);
    }
    return Rational(simplest_nonneg(lo.raw(), hi.raw()));
}

}  // namespace ech
