#pragma once

#include <stdexcept>
#include <vector>

#include "partalg/element.hpp"
#include "partalg/jm.hpp"

namespace partalg {

// Rational rescaling, the one operation the evaluation templates need
// beyond ring arithmetic. Overloads exist for every value type usable in
// eval_q/eval_l: plain rationals, Scalars, and algebra Elements.
inline Rational scale_rational(const Rational& c, const Rational& v) { return c * v; }
Scalar scale_rational(const Rational& c, const Scalar& v);
Element scale_rational(const Rational& c, const Element& v);

namespace detail {
template <typename V>
V power(const V& v, int n, const V& one) {
    V acc = one;
    for (int i = 0; i < n; ++i) acc = acc * v;
    return acc;
}
}  // namespace detail

// q_n(v_1,...,v_r): the sum of n-th powers over odd positions plus
// (-1)^{n+1} times the sum over even positions (positions count from 1).
// q_0 degenerates to (#odd - #even) copies of one. The `one` argument
// witnesses the multiplicative identity so that r = 0 works in any mode.
template <typename V>
V eval_q(int n, const std::vector<V>& values, const V& one) {
    if (n < 0) throw std::invalid_argument("negative degree");
    V acc = scale_rational(Rational(0), one);
    for (std::size_t p = 0; p < values.size(); ++p) {
        const V term = detail::power(values[p], n, one);
        const bool odd_position = p % 2 == 0;  // v_1 sits at index 0
        if (odd_position || n % 2 == 1)
            acc = acc + term;
        else
            acc = acc - term;
    }
    return acc;
}

// l_n(v_1,...,v_r): coefficients of Prod(1+v_odd t)/Prod(1-v_even t),
// computed through the Newton-style recursion
//   n*l_n = sum_{i=1..n} (-1)^{i+1} q_i l_{n-i},   l_0 = 1,
// which only ever divides by the integer n, so it applies verbatim to
// commuting algebra elements.
template <typename V>
V eval_l(int n, const std::vector<V>& values, const V& one) {
    if (n < 0) throw std::invalid_argument("negative degree");
    std::vector<V> q;  // q[i] = q_{i+1}
    q.reserve(n);
    for (int i = 1; i <= n; ++i) q.push_back(eval_q(i, values, one));

    std::vector<V> l{one};
    for (int m = 1; m <= n; ++m) {
        V acc = scale_rational(Rational(0), one);
        for (int i = 1; i <= m; ++i) {
            const V term = q[i - 1] * l[m - i];
            if (i % 2 == 1)
                acc = acc + term;
            else
                acc = acc - term;
        }
        l.push_back(scale_rational(Rational(1, m), acc));
    }
    return l[n];
}

// l_n evaluated at the normalised JM elements N_1,...,N_r.
Element l_at_jm(int n, int r, JMCache& cache);

struct CentralityCheck {
    int n = 0;
    bool pass = false;
};

struct CentralityReport {
    int level = 0;
    int n_max = 0;
    std::vector<CentralityCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// For each 0 <= n <= n_max, asserts that l_n(N_1..N_r) lies in the level-r
// subalgebra and commutes with all its generators. Failures are entries.
CentralityReport check_centrality(int r, int n_max, JMCache& cache);

struct CenterRankResult {
    int rank = 0;
    bool stable = false;  // one extra multiplication round adds nothing
};

// Dimension of the span of all products of {l_n(N_1..N_{2k}) : n <= n_max}
// with at most product_degree factors, at the specialized value delta,
// computed by exact incremental Gaussian elimination over the diagram
// basis. Defaults: n_max = 2k, product_degree = 2k. k above `bound` is
// rejected (Bell-number growth).
CenterRankResult center_rank(int k, const Rational& delta, int n_max = -1,
                             int product_degree = -1, int bound = 3);

}  // namespace partalg
