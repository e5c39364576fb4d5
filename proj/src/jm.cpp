#include "partalg/jm.hpp"

#include <stdexcept>

namespace partalg {

namespace {

Scalar half_delta(const Ring& ring) {
    return ring.mode == Mode::poly ? Scalar(DeltaPoly::monomial(1, Rational(1, 2)))
                                   : Scalar(Rational(ring.delta / 2));
}

}  // namespace

const Element& JMCache::sigma(int i) {
    if (i < 2 || i > 2 * ring_.k - 1)
        throw std::out_of_range("sigma index " + std::to_string(i) + " not in 2.." +
                                std::to_string(2 * ring_.k - 1));
    auto it = sigma_memo_.find(i);
    if (it == sigma_memo_.end()) it = sigma_memo_.emplace(i, compute_sigma(i)).first;
    return it->second;
}

const Element& JMCache::L(int i) {
    if (i < 1 || i > 2 * ring_.k)
        throw std::out_of_range("L index " + std::to_string(i) + " not in 1.." +
                                std::to_string(2 * ring_.k));
    auto it = l_memo_.find(i);
    if (it == l_memo_.end()) it = l_memo_.emplace(i, compute_L(i)).first;
    return it->second;
}

Element JMCache::N(int i) {
    return L(i) - Element::identity(ring_).scaled(half_delta(ring_));
}

Element JMCache::compute_sigma(int i) {
    if (i == 2) return Element::identity(ring_);
    if (i == 3) return gen_s(1, ring_);

    if (i % 2 == 1) {
        // sigma_{2j+1} for j >= 2.
        const int j = (i - 1) / 2;
        const Element s0 = gen_s(j - 1, ring_);
        const Element s1 = gen_s(j, ring_);
        const Element e0 = gen_e(2 * j - 2, ring_);
        const Element e1 = gen_e(2 * j - 1, ring_);
        const Element e2 = gen_e(2 * j, ring_);
        const Element& sig = sigma(2 * j - 1);
        const Element& l = L(2 * j - 2);
        return s0 * s1 * sig * s1 * s0
             + s1 * e0 * l * s1 * e0 * s1
             + e0 * l * s1 * e0
             - s1 * e0 * l * s0 * e2 * e1 * e0
             - e0 * e1 * e2 * s0 * l * e0 * s1;
    }

    // sigma_{2j} for j >= 2.
    const int j = i / 2;
    const Element s0 = gen_s(j - 1, ring_);
    const Element s1 = gen_s(j, ring_);
    const Element e0 = gen_e(2 * j - 2, ring_);
    const Element e1 = gen_e(2 * j - 1, ring_);
    const Element e2 = gen_e(2 * j, ring_);
    const Element& sig = sigma(2 * j - 2);
    const Element& l = L(2 * j - 2);
    return s0 * s1 * sig * s1 * s0
         + e0 * l * s1 * e0 * s1
         + s1 * e0 * l * s1 * e0
         - e0 * l * s0 * e2 * e1 * e0
         - s1 * e0 * e1 * e2 * s0 * l * e0 * s1;
}

Element JMCache::compute_L(int i) {
    if (i == 1) return Element::zero(ring_);
    if (i == 2) return gen_e(1, ring_);

    if (i % 2 == 0) {
        // L_{2j+2} for j >= 1.
        const int j = (i - 2) / 2;
        const Element s = gen_s(j, ring_);
        const Element e = gen_e(2 * j, ring_);
        const Element e_up = gen_e(2 * j + 1, ring_);
        const Element& l = L(2 * j);
        return s * l * s - s * l * e - e * l * s + e * l * e_up * e + sigma(2 * j + 1);
    }

    // L_{2j+1} for j >= 1.
    const int j = (i - 1) / 2;
    const Element s = gen_s(j, ring_);
    const Element e = gen_e(2 * j, ring_);
    const Element& l_odd = L(2 * j - 1);
    const Element& l_even = L(2 * j);
    const Element delta_minus =
        Element::identity(ring_).scaled(ring_.delta_scalar()) - l_odd;
    return s * l_odd * s - l_even * e - e * l_even + delta_minus * e + sigma(2 * j);
}

namespace {

// Collects relation instances; every identity is an exact Element equality.
class Verifier {
public:
    Verifier(int r, JMCache& cache) : r_(r), cache_(cache), ring_(cache.ring()) {}

    RelationReport run() {
        RelationReport report;
        report.level = r_;
        generator_relations();
        sigma_relations();
        l_relations();
        mixed_relations();
        n_commutation();
        n_skein();
        n_antisymmetry();
        membership();
        report.checks = std::move(checks_);
        return report;
    }

private:
    void record(std::string relation, std::map<std::string, int> indices, bool pass) {
        checks_.push_back({std::move(relation), std::move(indices), pass});
    }

    Element s(int i) const { return gen_s(i, ring_); }
    Element e(int j) const { return gen_e(j, ring_); }
    Element id() const { return Element::identity(ring_); }

    bool commutes(const Element& a, const std::vector<Element>& gens) const {
        for (const auto& g : gens)
            if (a * g != g * a) return false;
        return true;
    }

    void generator_relations() {
        for (int i = 1; 2 * i + 2 <= r_; ++i) {
            const Element si = s(i);
            const Element ee = e(2 * i);
            record("gen.s_absorbs_e_even", {{"i", i}},
                   si * ee == ee && ee * si == ee);
            record("gen.s_conjugates_e_odd", {{"i", i}},
                   si * e(2 * i - 1) * si == e(2 * i + 1));
        }
        for (int i = 1; i + 1 <= r_ - 1; ++i) {
            const Element a = e(i);
            const Element b = e(i + 1);
            record("gen.e_sandwich", {{"i", i}},
                   a * b * a == a && b * a * b == b);
        }
    }

    void sigma_relations() {
        for (int i = 2; i <= r_ - 1; ++i) {
            const Element& sig = cache_.sigma(i);
            record("sigma.star", {{"i", i}}, elem_star(sig) == sig);
            record("sigma.involutive", {{"i", i}}, sig * sig == id());
            record("sigma.commutes_lower", {{"i", i}},
                   commutes(sig, generators_at_level(i - 2, ring_)));
        }
        for (int i = 1; 2 * i + 2 <= r_; ++i) {
            const Element& even = cache_.sigma(2 * i);
            const Element& odd = cache_.sigma(2 * i + 1);
            record("sigma.product_s", {{"i", i}},
                   even * odd == s(i) && odd * even == s(i));
        }
    }

    void l_relations() {
        for (int i = 1; i <= r_; ++i) {
            const Element& l = cache_.L(i);
            record("L.star", {{"i", i}}, elem_star(l) == l);
            record("L.commutes_lower", {{"i", i}},
                   commutes(l, generators_at_level(i - 1, ring_)));
        }
        for (int i = 1; i <= r_; ++i)
            for (int j = i + 1; j <= r_; ++j)
                record("L.commute", {{"i", i}, {"j", j}},
                       cache_.L(i) * cache_.L(j) == cache_.L(j) * cache_.L(i));

        Element sum = Element::zero(ring_);
        for (int i = 1; i <= r_; ++i) sum = sum + cache_.L(i);
        record("L.sum_central", {{"r", r_}},
               in_subalgebra(sum, r_) && commutes(sum, generators_at_level(r_, ring_)));
    }

    void mixed_relations() {
        for (int i = 1; 2 * i + 2 <= r_; ++i) {
            const Element eo = e(2 * i + 1);
            const Element delta_minus =
                id().scaled(ring_.delta_scalar()) - cache_.L(2 * i - 1);
            record("L.e_sigma_e", {{"i", i}},
                   eo * cache_.sigma(2 * i) * eo == delta_minus * eo);
        }
        for (int i = 1; i <= r_ - 1; ++i) {
            const Element ei = e(i);
            const Element lsum = cache_.L(i) + cache_.L(i + 1);
            const Element rhs = ei.scaled(ring_.delta_scalar());
            record("L.e_delta_sum", {{"i", i}},
                   ei * lsum == rhs && lsum * ei == rhs);
        }
        for (int i = 1; 2 * i + 1 <= r_; ++i) {
            const Element ee = e(2 * i);
            const Element eo = e(2 * i - 1);
            const Element& sig = cache_.sigma(2 * i);
            const Element& l = cache_.L(2 * i);
            record("L.sigma_even_capture", {{"i", i}},
                   sig * eo * ee == l * ee && ee * eo * sig == ee * l);
        }
        for (int i = 1; 2 * i + 2 <= r_; ++i) {
            const Element ee = e(2 * i);
            const Element eo = e(2 * i + 1);
            const Element& sig = cache_.sigma(2 * i + 1);
            const Element& l = cache_.L(2 * i);
            record("L.sigma_odd_capture", {{"i", i}},
                   sig * eo * ee == l * ee && ee * eo * sig == ee * l);
        }
    }

    void n_commutation() {
        for (int i = 1; i <= r_ - 1; ++i)
            for (int j = 1; j <= r_; ++j) {
                if (j == i || j == i + 1) continue;
                const Element ei = e(i);
                const Element nj = cache_.N(j);
                record("N.commute_e", {{"i", i}, {"j", j}}, ei * nj == nj * ei);
            }
        for (int i = 1; 2 * i + 2 <= r_; ++i)
            for (int j = 1; j <= r_; ++j) {
                if (j >= 2 * i - 1 && j <= 2 * i + 2) continue;
                const Element si = s(i);
                const Element nj = cache_.N(j);
                record("N.commute_s", {{"i", i}, {"j", j}}, si * nj == nj * si);
            }
        for (int i = 1; 2 * i + 2 <= r_; ++i)
            for (int j = 1; j <= r_; ++j) {
                if (j >= 2 * i && j <= 2 * i + 2) continue;
                const Element& sig = cache_.sigma(2 * i + 1);
                const Element nj = cache_.N(j);
                record("N.commute_sigma_odd", {{"i", i}, {"j", j}},
                       sig * nj == nj * sig);
            }
        for (int i = 1; 2 * i + 1 <= r_; ++i)
            for (int j = 1; j <= r_; ++j) {
                if (j >= 2 * i - 1 && j <= 2 * i + 1) continue;
                const Element& sig = cache_.sigma(2 * i);
                const Element nj = cache_.N(j);
                record("N.commute_sigma_even", {{"i", i}, {"j", j}},
                       sig * nj == nj * sig);
            }
    }

    void n_skein() {
        for (int i = 1; 2 * i + 2 <= r_; ++i) {
            const Element si = s(i);
            const Element ee = e(2 * i);
            const Element eo = e(2 * i - 1);
            const Element eu = e(2 * i + 1);
            const Element& sg = cache_.sigma(2 * i);
            const Element& su = cache_.sigma(2 * i + 1);

            record("N.skein_s_odd", {{"i", i}},
                   cache_.N(2 * i + 1) ==
                       si * cache_.N(2 * i - 1) * si - sg * eo * ee - ee * eo * sg +
                           ee * eo * sg * eo * ee + sg);
            record("N.skein_s_even", {{"i", i}},
                   cache_.N(2 * i + 2) ==
                       si * cache_.N(2 * i) * si - su * eo * ee - ee * eo * su +
                           ee * eu * su * eu * ee + su);
            record("N.skein_sigma_even", {{"i", i}},
                   cache_.N(2 * i + 2) ==
                       su * cache_.N(2 * i) * su - eu * ee - ee * eu +
                           ee * eu * su * eu * ee + su);
            record("N.skein_sigma_fix", {{"i", i}},
                   cache_.N(2 * i + 1) ==
                       su * cache_.N(2 * i + 1) * su + eu * ee + ee * eu -
                           su * eu * ee - ee * eu * su);
        }
    }

    void n_antisymmetry() {
        for (int i = 1; i <= r_ - 1; ++i) {
            const Element ei = e(i);
            const Element ni = cache_.N(i);
            const Element nu = cache_.N(i + 1);
            record("N.e_antisym", {{"i", i}},
                   ei * ni == -(ei * nu) && ni * ei == -(nu * ei));
        }
    }

    void membership() {
        for (int i = 2; i <= r_ - 1; ++i)
            record("sigma.in_level", {{"i", i}}, in_subalgebra(cache_.sigma(i), i + 1));
        for (int i = 1; i <= r_; ++i)
            record("L.in_level", {{"i", i}}, in_subalgebra(cache_.L(i), i));
    }

    int r_;
    JMCache& cache_;
    const Ring& ring_;
    std::vector<RelationCheck> checks_;
};

}  // namespace

RelationReport verify_relations(int r, JMCache& cache) {
    if (r < 0 || r > 2 * cache.k())
        throw std::out_of_range("level " + std::to_string(r) + " not in 0.." +
                                std::to_string(2 * cache.k()));
    return Verifier(r, cache).run();
}

}  // namespace partalg
