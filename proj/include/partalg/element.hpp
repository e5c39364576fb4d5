#pragma once

#include <map>
#include <string>
#include <vector>

#include "partalg/diagram.hpp"
#include "partalg/scalar.hpp"

namespace partalg {

// Ambient context for algebra elements: strand count k, coefficient mode,
// and — in rational mode only — the specialized value of delta that feeds
// the delta^removed factor in products.
struct Ring {
    int k = 0;
    Mode mode = Mode::poly;
    Rational delta{0};

    Scalar zero() const { return Scalar::zero(mode); }
    Scalar one() const { return Scalar::one(mode); }
    Scalar from_int(long n) const { return Scalar::from_int(n, mode); }
    Scalar delta_scalar() const;     // delta as a Scalar in this mode
    Scalar delta_power(int n) const; // delta^n in this mode

    bool operator==(const Ring& rhs) const {
        return k == rhs.k && mode == rhs.mode &&
               (mode == Mode::poly || delta == rhs.delta);
    }
    bool operator!=(const Ring& rhs) const { return !(*this == rhs); }
};

// A finite formal linear combination of diagrams over one Ring. Immutable
// in use: every operation returns a fresh value. Terms are keyed by the
// canonical diagram order, so iteration (and serialization) is stable.
class Element {
public:
    explicit Element(Ring ring) : ring_(std::move(ring)) {}
    Element(Ring ring, const Diagram& d);  // the single term 1*d

    const Ring& ring() const { return ring_; }
    int k() const { return ring_.k; }
    Mode mode() const { return ring_.mode; }
    const std::map<Diagram, Scalar>& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }

    Scalar coeff(const Diagram& d) const;  // zero when d is absent

    Element operator-() const;
    Element operator+(const Element& rhs) const;
    Element operator-(const Element& rhs) const;
    Element operator*(const Element& rhs) const;
    bool operator==(const Element& rhs) const {
        return ring_ == rhs.ring_ && terms_ == rhs.terms_;
    }
    bool operator!=(const Element& rhs) const { return !(*this == rhs); }

    Element scaled(const Scalar& c) const;
    Element star() const;  // termwise diagram involution

    std::string str() const;

    static Element zero(Ring ring) { return Element(std::move(ring)); }
    static Element identity(Ring ring);

private:
    void add_term(const Diagram& d, const Scalar& c);
    Ring ring_;
    std::map<Diagram, Scalar> terms_;
};

Element elem_add(const Element& a, const Element& b);
Element elem_scale(const Scalar& c, const Element& a);
Element elem_mul(const Element& a, const Element& b);
Element elem_star(const Element& a);

// The diagram generators inside A_{2k}: gen_s(i) swaps strands i, i+1
// (1 <= i <= k-1); gen_e(j) for odd j = 2j0-1 cuts strand j0 into two
// singletons, for even j = 2i merges strands i, i+1 into one block
// (1 <= j <= 2k-1).
Element gen_s(int i, const Ring& ring);
Element gen_e(int j, const Ring& ring);

// Generators of the level-r subalgebra A_r inside A_{2k}:
// e_1..e_{r-1} and s_1..s_{floor(r/2)-1}.
std::vector<Element> generators_at_level(int r, const Ring& ring);

// Membership in A_r inside A_{2k}: every diagram must have {m, m'} as a
// block for each m with r < 2m <= 2k, and for odd r = 2m0-1 the vertices
// m0 and m0' must additionally share a block.
bool in_subalgebra(const Element& a, int r);

// True iff a commutes with every generator of A_r. Requires a in A_r.
bool commutes_with_generators(const Element& a, int r);

}  // namespace partalg
