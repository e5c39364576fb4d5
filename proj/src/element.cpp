#include "partalg/element.hpp"

#include <sstream>
#include <stdexcept>

namespace partalg {

namespace {

void require_same_ring(const Element& a, const Element& b) {
    if (a.ring() != b.ring())
        throw std::invalid_argument("element ring mismatch (k, mode, or delta differ)");
}

// Identity blocks {m, m'} for every strand except those listed.
std::vector<std::vector<int>> identity_blocks_except(int k, std::initializer_list<int> skip) {
    std::vector<std::vector<int>> blocks;
    for (int m = 1; m <= k; ++m) {
        bool skipped = false;
        for (int s : skip) skipped = skipped || s == m;
        if (!skipped) blocks.push_back({m, -m});
    }
    return blocks;
}

}  // namespace

Scalar Ring::delta_scalar() const {
    return mode == Mode::poly ? Scalar(DeltaPoly::variable()) : Scalar(delta);
}

Scalar Ring::delta_power(int n) const {
    return mode == Mode::poly ? Scalar(DeltaPoly::monomial(n)) : Scalar(rational_pow(delta, n));
}

Element::Element(Ring ring, const Diagram& d) : ring_(std::move(ring)) {
    if (d.k() != ring_.k) throw std::invalid_argument("diagram strand count differs from ring");
    add_term(d, ring_.one());
}

Scalar Element::coeff(const Diagram& d) const {
    const auto it = terms_.find(d);
    return it == terms_.end() ? ring_.zero() : it->second;
}

void Element::add_term(const Diagram& d, const Scalar& c) {
    if (c.mode() != ring_.mode) throw std::invalid_argument("scalar mode differs from ring");
    auto [it, inserted] = terms_.try_emplace(d, c);
    if (!inserted) it->second = it->second + c;
    if (it->second.is_zero()) terms_.erase(it);
}

Element Element::operator-() const {
    Element out(ring_);
    for (const auto& [d, c] : terms_) out.terms_.emplace(d, -c);
    return out;
}

Element Element::operator+(const Element& rhs) const {
    require_same_ring(*this, rhs);
    Element out = *this;
    for (const auto& [d, c] : rhs.terms_) out.add_term(d, c);
    return out;
}

Element Element::operator-(const Element& rhs) const { return *this + (-rhs); }

Element Element::operator*(const Element& rhs) const {
    require_same_ring(*this, rhs);
    Element out(ring_);
    for (const auto& [d1, c1] : terms_)
        for (const auto& [d2, c2] : rhs.terms_) {
            const auto composed = compose(d1, d2);
            out.add_term(composed.product, c1 * c2 * ring_.delta_power(composed.removed));
        }
    return out;
}

Element Element::scaled(const Scalar& c) const {
    if (c.mode() != ring_.mode) throw std::invalid_argument("scalar mode differs from ring");
    Element out(ring_);
    if (c.is_zero()) return out;
    for (const auto& [d, coeff] : terms_) out.terms_.emplace(d, coeff * c);
    return out;
}

Element Element::star() const {
    Element out(ring_);
    for (const auto& [d, c] : terms_) out.terms_.emplace(involution(d), c);
    return out;
}

std::string Element::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (const auto& [d, c] : terms_) {
        if (!first) out << " + ";
        first = false;
        out << '(' << c.str() << ")*[" << d.str() << ']';
    }
    return out.str();
}

Element Element::identity(Ring ring) {
    const int k = ring.k;
    return Element(std::move(ring), Diagram::identity(k));
}

Element elem_add(const Element& a, const Element& b) { return a + b; }
Element elem_scale(const Scalar& c, const Element& a) { return a.scaled(c); }
Element elem_mul(const Element& a, const Element& b) { return a * b; }
Element elem_star(const Element& a) { return a.star(); }

Element gen_s(int i, const Ring& ring) {
    if (i < 1 || i > ring.k - 1)
        throw std::out_of_range("gen_s index " + std::to_string(i) + " not in 1.." +
                                std::to_string(ring.k - 1));
    auto blocks = identity_blocks_except(ring.k, {i, i + 1});
    blocks.push_back({i, -(i + 1)});
    blocks.push_back({i + 1, -i});
    return Element(ring, Diagram(ring.k, std::move(blocks)));
}

Element gen_e(int j, const Ring& ring) {
    if (j < 1 || j > 2 * ring.k - 1)
        throw std::out_of_range("gen_e index " + std::to_string(j) + " not in 1.." +
                                std::to_string(2 * ring.k - 1));
    std::vector<std::vector<int>> blocks;
    if (j % 2 == 1) {
        const int j0 = (j + 1) / 2;
        blocks = identity_blocks_except(ring.k, {j0});
        blocks.push_back({j0});
        blocks.push_back({-j0});
    } else {
        const int i = j / 2;
        blocks = identity_blocks_except(ring.k, {i, i + 1});
        blocks.push_back({i, i + 1, -i, -(i + 1)});
    }
    return Element(ring, Diagram(ring.k, std::move(blocks)));
}

std::vector<Element> generators_at_level(int r, const Ring& ring) {
    if (r < 0 || r > 2 * ring.k) throw std::out_of_range("level out of range");
    std::vector<Element> gens;
    for (int j = 1; j <= r - 1; ++j) gens.push_back(gen_e(j, ring));
    for (int i = 1; i <= r / 2 - 1; ++i) gens.push_back(gen_s(i, ring));
    return gens;
}

bool in_subalgebra(const Element& a, int r) {
    if (r < 0 || r > 2 * a.k()) throw std::out_of_range("level out of range");
    const int k = a.k();
    for (const auto& [d, c] : a.terms()) {
        // Map each vertex to its block index.
        std::vector<int> block_of(2 * k, -1);
        for (std::size_t b = 0; b < d.blocks().size(); ++b)
            for (int v : d.blocks()[b])
                block_of[v > 0 ? v - 1 : k + (-v) - 1] = static_cast<int>(b);

        // Exact pair blocks are required strictly above ceil(r/2); for odd
        // r the strand at ceil(r/2) only needs its endpoints connected.
        for (int m = (r + 3) / 2; m <= k; ++m) {
            const auto& block = d.blocks()[block_of[m - 1]];
            if (!(block.size() == 2 && block[0] == m && block[1] == -m)) return false;
        }
        if (r % 2 == 1) {
            const int m0 = (r + 1) / 2;
            if (block_of[m0 - 1] != block_of[k + m0 - 1]) return false;
        }
    }
    return true;
}

bool commutes_with_generators(const Element& a, int r) {
    if (!in_subalgebra(a, r))
        throw std::invalid_argument("element does not lie in the level-" + std::to_string(r) +
                                    " subalgebra");
    for (const auto& g : generators_at_level(r, a.ring()))
        if (a * g != g * a) return false;
    return true;
}

}  // namespace partalg
