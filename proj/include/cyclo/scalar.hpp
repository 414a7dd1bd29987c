#pragma once

#include <optional>
#include <string>

#include "cyclo/errors.hpp"
#include "cyclo/rational.hpp"

namespace cyclo {

// Element a + b*kappa + c*kappa^-1 of the scalar tower over Q.
//
// kappa is either a formal transcendental or a fixed nonzero rational r.
// A third mode, Pure, marks plain rationals that have made no commitment about
// kappa; they combine freely with either committed mode. In RationalK mode the
// value collapses to the single rational a + b*r + c/r at construction, so
// b_ == c_ == 0 always holds there and equality is equality of the collapsed
// value. Mixing Transcendental with RationalK (or two different r's) raises
// mode_mismatch; products leaving span{1, kappa, kappa^-1} raise scalar_span.
class ExactScalar {
public:
    enum class Mode { Pure, Transcendental, RationalK };

    ExactScalar() : mode_(Mode::Pure) {}
    ExactScalar(std::int64_t n) : a_(n), mode_(Mode::Pure) {}  // NOLINT: implicit
    ExactScalar(const Rational& a) : a_(a), mode_(Mode::Pure) {}  // NOLINT: implicit

    static ExactScalar rational(const Rational& a) { return ExactScalar(a); }

    // The transcendental symbol kappa, or its inverse.
    static ExactScalar kappa() { return transcendental(0, 1, 0); }
    static ExactScalar kappa_inv() { return transcendental(0, 0, 1); }

    static ExactScalar transcendental(const Rational& a, const Rational& b, const Rational& c) {
        ExactScalar x;
        x.a_ = a;
        x.b_ = b;
        x.c_ = c;
        x.mode_ = Mode::Transcendental;
        return x;
    }

    // a + b*r + c/r with kappa fixed at the nonzero rational r; collapses.
    static ExactScalar at_rational_kappa(const Rational& a, const Rational& b, const Rational& c,
                                         const Rational& r) {
        if (r.is_zero()) fail(errc::kappa_zero, "kappa specialized to zero");
        ExactScalar x;
        x.a_ = a + b * r + c / r;
        x.mode_ = Mode::RationalK;
        x.kappa_ = r;
        return x;
    }

    Mode mode() const { return mode_; }
    const Rational& coeff_a() const { return a_; }
    const Rational& coeff_b() const { return b_; }
    const Rational& coeff_c() const { return c_; }

    // The fixed rational value of kappa, when in RationalK mode.
    std::optional<Rational> kappa_value() const {
        if (mode_ == Mode::RationalK) return kappa_;
        return std::nullopt;
    }

    bool is_zero() const { return a_.is_zero() && b_.is_zero() && c_.is_zero(); }
    bool is_rational() const { return b_.is_zero() && c_.is_zero(); }
    bool is_integer() const { return is_rational() && a_.is_integer(); }

    Rational as_rational() const {
        if (!is_rational())
            fail(errc::not_integral, "scalar " + str() + " is not rational");
        return a_;
    }
    std::int64_t as_integer() const { return as_rational().as_integer(); }

    friend ExactScalar operator+(const ExactScalar& x, const ExactScalar& y) {
        ExactScalar z = combined(x, y);
        z.a_ = x.a_ + y.a_;
        z.b_ = x.b_ + y.b_;
        z.c_ = x.c_ + y.c_;
        return z;
    }
    friend ExactScalar operator-(const ExactScalar& x, const ExactScalar& y) {
        ExactScalar z = combined(x, y);
        z.a_ = x.a_ - y.a_;
        z.b_ = x.b_ - y.b_;
        z.c_ = x.c_ - y.c_;
        return z;
    }
    ExactScalar operator-() const {
        ExactScalar z = *this;
        z.a_ = -z.a_;
        z.b_ = -z.b_;
        z.c_ = -z.c_;
        return z;
    }
    friend ExactScalar operator*(const ExactScalar& x, const ExactScalar& y) {
        ExactScalar z = combined(x, y);
        if (z.mode_ == Mode::RationalK || x.is_rational() || y.is_rational()) {
            // At rational kappa everything is collapsed; otherwise one factor is a
            // plain rational and scales the other componentwise.
            if (x.is_rational()) {
                z.a_ = x.a_ * y.a_;
                z.b_ = x.a_ * y.b_;
                z.c_ = x.a_ * y.c_;
            } else {
                z.a_ = y.a_ * x.a_;
                z.b_ = y.a_ * x.b_;
                z.c_ = y.a_ * x.c_;
            }
            return z;
        }
        // General transcendental product: reject kappa^2 / kappa^-2 terms.
        if (!(x.b_ * y.b_).is_zero() || !(x.c_ * y.c_).is_zero())
            fail(errc::scalar_span,
                 "product (" + x.str() + ")*(" + y.str() + ") leaves span{1, kappa, kappa^-1}");
        z.a_ = x.a_ * y.a_ + x.b_ * y.c_ + x.c_ * y.b_;
        z.b_ = x.a_ * y.b_ + x.b_ * y.a_;
        z.c_ = x.a_ * y.c_ + x.c_ * y.a_;
        return z;
    }
    friend ExactScalar operator/(const ExactScalar& x, const ExactScalar& y) {
        if (y.is_zero()) fail(errc::overflow, "division by zero scalar");
        ExactScalar z = combined(x, y);
        if (z.mode_ == Mode::RationalK || y.is_rational()) {
            z.a_ = x.a_ / y.a_;
            z.b_ = x.b_ / y.a_;
            z.c_ = x.c_ / y.a_;
            return z;
        }
        // Transcendental division by a kappa-monomial.
        if (y.a_.is_zero() && y.c_.is_zero()) {  // y = b*kappa
            if (!x.c_.is_zero())
                fail(errc::scalar_span,
                     "quotient (" + x.str() + ")/(" + y.str() + ") leaves span{1, kappa, kappa^-1}");
            z.a_ = x.b_ / y.b_;
            z.b_ = Rational(0);
            z.c_ = x.a_ / y.b_;
            return z;
        }
        if (y.a_.is_zero() && y.b_.is_zero()) {  // y = c*kappa^-1
            if (!x.b_.is_zero())
                fail(errc::scalar_span,
                     "quotient (" + x.str() + ")/(" + y.str() + ") leaves span{1, kappa, kappa^-1}");
            z.a_ = x.c_ / y.c_;
            z.b_ = x.a_ / y.c_;
            z.c_ = Rational(0);
            return z;
        }
        fail(errc::scalar_span, "cannot divide by mixed scalar " + y.str());
    }

    ExactScalar& operator+=(const ExactScalar& o) { return *this = *this + o; }
    ExactScalar& operator-=(const ExactScalar& o) { return *this = *this - o; }
    ExactScalar& operator*=(const ExactScalar& o) { return *this = *this * o; }
    ExactScalar& operator/=(const ExactScalar& o) { return *this = *this / o; }

    friend bool operator==(const ExactScalar& x, const ExactScalar& y) {
        return (x - y).is_zero();
    }
    friend bool operator!=(const ExactScalar& x, const ExactScalar& y) { return !(x == y); }

    // Compact display form; "k" stands for kappa. JSON form lives in json_io.
    std::string str() const {
        if (is_rational()) return a_.str();
        std::string out;
        auto term = [&out](const Rational& coef, const std::string& sym) {
            if (coef.is_zero()) return;
            std::string mag;
            Rational abs = coef < Rational(0) ? -coef : coef;
            if (sym.empty()) {
                mag = abs.str();
            } else if (abs == Rational(1)) {
                mag = sym;
            } else if (abs.is_integer()) {
                mag = abs.str() + "*" + sym;
            } else {
                mag = "(" + abs.str() + ")*" + sym;
            }
            if (out.empty()) {
                out = (coef < Rational(0) ? "-" : "") + mag;
            } else {
                out += (coef < Rational(0) ? " - " : " + ") + mag;
            }
        };
        term(a_, "");
        term(b_, "k");
        term(c_, "k^-1");
        return out.empty() ? "0" : out;
    }

private:
    static ExactScalar combined(const ExactScalar& x, const ExactScalar& y) {
        ExactScalar z;
        if (x.mode_ == y.mode_) {
            if (x.mode_ == Mode::RationalK && x.kappa_ != y.kappa_)
                fail(errc::mode_mismatch, "scalars fix kappa to " + x.kappa_.str() + " and " +
                                              y.kappa_.str());
            z.mode_ = x.mode_;
            z.kappa_ = x.kappa_;
        } else if (x.mode_ == Mode::Pure) {
            z.mode_ = y.mode_;
            z.kappa_ = y.kappa_;
        } else if (y.mode_ == Mode::Pure) {
            z.mode_ = x.mode_;
            z.kappa_ = x.kappa_;
        } else {
            fail(errc::mode_mismatch, "cannot combine transcendental and rational kappa scalars");
        }
        return z;
    }

    Rational a_, b_, c_;
    Mode mode_;
    Rational kappa_;  // meaningful only in RationalK mode
};

}  // namespace cyclo
