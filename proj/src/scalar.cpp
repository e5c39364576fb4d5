#include "partalg/scalar.hpp"

#include <sstream>
#include <stdexcept>

namespace partalg {

Rational parse_rational(const std::string& text) {
    const auto slash = text.find('/');
    try {
        if (slash == std::string::npos) {
            return Rational(Integer(text));
        }
        Integer num(text.substr(0, slash));
        Integer den(text.substr(slash + 1));
        if (den == 0) throw std::invalid_argument("rational with zero denominator: " + text);
        if (den < 0) {
            num = -num;
            den = -den;
        }
        return Rational(num, den);
    } catch (const std::runtime_error&) {
        throw std::invalid_argument("malformed rational: " + text);
    }
}

std::string format_rational(const Rational& value) {
    std::ostringstream out;
    out << numerator(value);
    if (denominator(value) != 1) out << '/' << denominator(value);
    return out.str();
}

Rational rational_pow(const Rational& base, int exponent) {
    if (exponent < 0) throw std::invalid_argument("negative exponent");
    Rational result = 1;
    for (int i = 0; i < exponent; ++i) result *= base;
    return result;
}

DeltaPoly::DeltaPoly(Rational constant) {
    if (constant != 0) coeffs_.push_back(std::move(constant));
}

DeltaPoly::DeltaPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { strip(); }

DeltaPoly DeltaPoly::variable() { return monomial(1); }

DeltaPoly DeltaPoly::monomial(int degree, Rational coeff) {
    if (degree < 0) throw std::invalid_argument("negative degree");
    DeltaPoly p;
    if (coeff != 0) {
        p.coeffs_.assign(degree + 1, Rational(0));
        p.coeffs_[degree] = std::move(coeff);
    }
    return p;
}

Rational DeltaPoly::coeff(int degree) const {
    if (degree < 0 || degree >= static_cast<int>(coeffs_.size())) return 0;
    return coeffs_[degree];
}

void DeltaPoly::strip() {
    while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

DeltaPoly DeltaPoly::operator-() const {
    DeltaPoly out = *this;
    for (auto& c : out.coeffs_) c = -c;
    return out;
}

DeltaPoly DeltaPoly::operator+(const DeltaPoly& rhs) const {
    DeltaPoly out;
    out.coeffs_.resize(std::max(coeffs_.size(), rhs.coeffs_.size()), Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i) out.coeffs_[i] += coeffs_[i];
    for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) out.coeffs_[i] += rhs.coeffs_[i];
    out.strip();
    return out;
}

DeltaPoly DeltaPoly::operator-(const DeltaPoly& rhs) const { return *this + (-rhs); }

DeltaPoly DeltaPoly::operator*(const DeltaPoly& rhs) const {
    if (is_zero() || rhs.is_zero()) return DeltaPoly();
    DeltaPoly out;
    out.coeffs_.assign(coeffs_.size() + rhs.coeffs_.size() - 1, Rational(0));
    for (std::size_t i = 0; i < coeffs_.size(); ++i)
        for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j)
            out.coeffs_[i + j] += coeffs_[i] * rhs.coeffs_[j];
    out.strip();
    return out;
}

Rational DeltaPoly::evaluate(const Rational& value) const {
    Rational acc = 0;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * value + *it;
    return acc;
}

std::string DeltaPoly::str() const {
    if (coeffs_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (std::size_t n = 0; n < coeffs_.size(); ++n) {
        const Rational& c = coeffs_[n];
        if (c == 0) continue;
        const bool negative = c < 0;
        const Rational mag = negative ? Rational(-c) : c;
        if (first) {
            if (negative) out << '-';
            first = false;
        } else {
            out << (negative ? " - " : " + ");
        }
        if (n == 0) {
            out << format_rational(mag);
        } else {
            if (mag != 1) out << format_rational(mag) << '*';
            out << 'd';
            if (n > 1) out << '^' << n;
        }
    }
    return out.str();
}

Scalar Scalar::zero(Mode mode) {
    return mode == Mode::rational ? Scalar(Rational(0)) : Scalar(DeltaPoly());
}

Scalar Scalar::one(Mode mode) {
    return mode == Mode::rational ? Scalar(Rational(1)) : Scalar(DeltaPoly(Rational(1)));
}

Scalar Scalar::from_int(long n, Mode mode) {
    return mode == Mode::rational ? Scalar(Rational(n)) : Scalar(DeltaPoly(Rational(n)));
}

bool Scalar::is_zero() const {
    if (mode() == Mode::rational) return std::get<Rational>(value_) == 0;
    return std::get<DeltaPoly>(value_).is_zero();
}

const Rational& Scalar::rational() const {
    if (mode() != Mode::rational) throw std::invalid_argument("scalar is not in rational mode");
    return std::get<Rational>(value_);
}

const DeltaPoly& Scalar::poly() const {
    if (mode() != Mode::poly) throw std::invalid_argument("scalar is not in poly mode");
    return std::get<DeltaPoly>(value_);
}

namespace {
void require_same_mode(const Scalar& a, const Scalar& b) {
    if (a.mode() != b.mode())
        throw std::invalid_argument("scalar mode mismatch (rational vs poly)");
}
}  // namespace

Scalar Scalar::operator-() const {
    if (mode() == Mode::rational) return Scalar(Rational(-std::get<Rational>(value_)));
    return Scalar(-std::get<DeltaPoly>(value_));
}

Scalar Scalar::operator+(const Scalar& rhs) const {
    require_same_mode(*this, rhs);
    if (mode() == Mode::rational)
        return Scalar(Rational(std::get<Rational>(value_) + std::get<Rational>(rhs.value_)));
    return Scalar(std::get<DeltaPoly>(value_) + std::get<DeltaPoly>(rhs.value_));
}

Scalar Scalar::operator-(const Scalar& rhs) const { return *this + (-rhs); }

Scalar Scalar::operator*(const Scalar& rhs) const {
    require_same_mode(*this, rhs);
    if (mode() == Mode::rational)
        return Scalar(Rational(std::get<Rational>(value_) * std::get<Rational>(rhs.value_)));
    return Scalar(std::get<DeltaPoly>(value_) * std::get<DeltaPoly>(rhs.value_));
}

bool Scalar::operator==(const Scalar& rhs) const {
    if (mode() != rhs.mode()) return false;
    if (mode() == Mode::rational)
        return std::get<Rational>(value_) == std::get<Rational>(rhs.value_);
    return std::get<DeltaPoly>(value_) == std::get<DeltaPoly>(rhs.value_);
}

std::string Scalar::str() const {
    if (mode() == Mode::rational) return format_rational(std::get<Rational>(value_));
    return std::get<DeltaPoly>(value_).str();
}

Scalar ring_add(const Scalar& a, const Scalar& b) { return a + b; }
Scalar ring_mul(const Scalar& a, const Scalar& b) { return a * b; }
Rational specialize(const DeltaPoly& p, const Rational& d) { return p.evaluate(d); }

Scalar content_to_scalar(const ContentValue& c, Mode mode, const Rational& delta) {
    if (mode == Mode::rational) return Scalar(Rational(c.a + c.b * delta));
    return Scalar(DeltaPoly(std::vector<Rational>{c.a, c.b}));
}

std::string format_content(const ContentValue& c) {
    return DeltaPoly(std::vector<Rational>{c.a, c.b}).str();
}

}  // namespace partalg
