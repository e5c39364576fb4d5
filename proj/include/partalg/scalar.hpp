#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <cstddef>
#include <string>
#include <variant>
#include <vector>

namespace partalg {

// Exact rational scalars. cpp_rational keeps lowest terms with positive
// denominator on its own, which is exactly the canonical form we need.
using Integer = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Accepts "p", "-p", "p/q" (q may be negative; result is canonicalized).
Rational parse_rational(const std::string& text);

// Canonical text form: "p" when the denominator is 1, else "p/q" with q > 0.
std::string format_rational(const Rational& value);

Rational rational_pow(const Rational& base, int exponent);

// Univariate polynomials in the formal loop parameter d (delta) over Q.
// coeff[n] holds the d^n coefficient; trailing zeros are stripped so the
// zero polynomial is the empty vector and equality is plain vector equality.
class DeltaPoly {
public:
    DeltaPoly() = default;
    explicit DeltaPoly(Rational constant);
    explicit DeltaPoly(std::vector<Rational> coeffs);

    static DeltaPoly variable();               // the polynomial d
    static DeltaPoly monomial(int degree, Rational coeff = 1);

    const std::vector<Rational>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
    Rational coeff(int degree) const;

    DeltaPoly operator-() const;
    DeltaPoly operator+(const DeltaPoly& rhs) const;
    DeltaPoly operator-(const DeltaPoly& rhs) const;
    DeltaPoly operator*(const DeltaPoly& rhs) const;
    bool operator==(const DeltaPoly& rhs) const { return coeffs_ == rhs.coeffs_; }
    bool operator!=(const DeltaPoly& rhs) const { return !(*this == rhs); }

    // Horner evaluation at d = value; specialization is a ring homomorphism.
    Rational evaluate(const Rational& value) const;

    // e.g. "1 - 1/2*d + 3*d^2"; the zero polynomial prints as "0".
    std::string str() const;

private:
    void strip();
    std::vector<Rational> coeffs_;
};

enum class Mode { rational, poly };

// A coefficient that is either a plain rational (d specialized) or a
// polynomial in d (d symbolic). One computation fixes one mode; mixing
// modes in arithmetic is an error, never a silent coercion.
class Scalar {
public:
    Scalar() : value_(Rational(0)) {}
    explicit Scalar(Rational value) : value_(std::move(value)) {}
    explicit Scalar(DeltaPoly value) : value_(std::move(value)) {}

    static Scalar zero(Mode mode);
    static Scalar one(Mode mode);
    static Scalar from_int(long n, Mode mode);

    Mode mode() const { return std::holds_alternative<Rational>(value_) ? Mode::rational : Mode::poly; }
    bool is_zero() const;

    const Rational& rational() const;   // throws unless rational mode
    const DeltaPoly& poly() const;      // throws unless poly mode

    Scalar operator-() const;
    Scalar operator+(const Scalar& rhs) const;
    Scalar operator-(const Scalar& rhs) const;
    Scalar operator*(const Scalar& rhs) const;
    bool operator==(const Scalar& rhs) const;
    bool operator!=(const Scalar& rhs) const { return !(*this == rhs); }

    std::string str() const;

private:
    std::variant<Rational, DeltaPoly> value_;
};

Scalar ring_add(const Scalar& a, const Scalar& b);
Scalar ring_mul(const Scalar& a, const Scalar& b);
Rational specialize(const DeltaPoly& p, const Rational& d);

// An exact value a + b*d; the eigenvalue data attached to branching paths.
struct ContentValue {
    Rational a;
    Rational b;

    bool operator==(const ContentValue& rhs) const { return a == rhs.a && b == rhs.b; }
    bool operator<(const ContentValue& rhs) const {
        return a != rhs.a ? a < rhs.a : b < rhs.b;
    }
};

// Realize a content value in the requested mode (delta is only read in
// rational mode, where the content specializes to a + b*delta).
Scalar content_to_scalar(const ContentValue& c, Mode mode, const Rational& delta);

std::string format_content(const ContentValue& c);

}  // namespace partalg
