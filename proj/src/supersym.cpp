#include "partalg/supersym.hpp"

#include <map>
#include <utility>

namespace partalg {

Scalar scale_rational(const Rational& c, const Scalar& v) {
    if (v.mode() == Mode::rational) return Scalar(Rational(c * v.rational()));
    return Scalar(DeltaPoly(c)) * v;
}

Element scale_rational(const Rational& c, const Element& v) {
    const Scalar factor = v.mode() == Mode::rational ? Scalar(c) : Scalar(DeltaPoly(c));
    return v.scaled(factor);
}

Element l_at_jm(int n, int r, JMCache& cache) {
    if (r < 0 || r > 2 * cache.k()) throw std::out_of_range("level out of range");
    std::vector<Element> values;
    values.reserve(r);
    for (int i = 1; i <= r; ++i) values.push_back(cache.N(i));
    return eval_l(n, values, Element::identity(cache.ring()));
}

CentralityReport check_centrality(int r, int n_max, JMCache& cache) {
    if (r < 0 || r > 2 * cache.k()) throw std::out_of_range("level out of range");
    if (n_max < 0) throw std::invalid_argument("negative degree bound");
    CentralityReport report;
    report.level = r;
    report.n_max = n_max;
    const auto gens = generators_at_level(r, cache.ring());
    for (int n = 0; n <= n_max; ++n) {
        const Element l = l_at_jm(n, r, cache);
        bool pass = in_subalgebra(l, r);
        for (const auto& g : gens) {
            if (!pass) break;
            pass = l * g == g * l;
        }
        report.checks.push_back({n, pass});
    }
    return report;
}

namespace {

// Incremental exact row echelon over the rationals: rows are coefficient
// vectors over a fixed diagram basis; rank grows only on independent rows.
class RowEchelon {
public:
    explicit RowEchelon(std::size_t width) : width_(width) {}

    int rank() const { return static_cast<int>(rows_.size()); }

    // Returns true when the row was independent of the current span.
    bool insert(std::vector<Rational> row) {
        for (const auto& [pivot, existing] : rows_) {
            if (row[pivot] == 0) continue;
            const Rational factor = row[pivot];
            for (std::size_t c = 0; c < width_; ++c) row[c] -= factor * existing[c];
        }
        std::size_t pivot = width_;
        for (std::size_t c = 0; c < width_; ++c)
            if (row[c] != 0) {
                pivot = c;
                break;
            }
        if (pivot == width_) return false;
        const Rational lead = row[pivot];
        for (std::size_t c = 0; c < width_; ++c) row[c] /= lead;
        rows_.emplace(pivot, std::move(row));
        return true;
    }

private:
    std::size_t width_;
    std::map<std::size_t, std::vector<Rational>> rows_;  // pivot -> row
};

std::vector<Rational> to_row(const Element& a, const std::map<Diagram, std::size_t>& index) {
    std::vector<Rational> row(index.size(), Rational(0));
    for (const auto& [d, c] : a.terms()) row[index.at(d)] = c.rational();
    return row;
}

}  // namespace

CenterRankResult center_rank(int k, const Rational& delta, int n_max, int product_degree,
                             int bound) {
    if (k < 0) throw std::invalid_argument("negative strand count");
    if (k > bound)
        throw std::runtime_error("center_rank: k=" + std::to_string(k) +
                                 " exceeds bound " + std::to_string(bound));
    if (n_max < 0) n_max = 2 * k;
    if (product_degree < 0) product_degree = 2 * k;

    const Ring ring{k, Mode::rational, delta};
    JMCache cache(ring);

    const auto basis = all_diagrams(k, std::max(bound, 4));
    std::map<Diagram, std::size_t> index;
    for (std::size_t p = 0; p < basis.size(); ++p) index.emplace(basis[p], p);

    std::vector<Element> multipliers;
    for (int n = 1; n <= n_max; ++n) multipliers.push_back(l_at_jm(n, 2 * k, cache));

    RowEchelon span(basis.size());
    std::vector<Element> kept;

    const Element one = Element::identity(ring);
    span.insert(to_row(one, index));
    kept.push_back(one);
    std::vector<Element> frontier{one};

    for (int degree = 1; degree <= product_degree && !frontier.empty(); ++degree) {
        std::vector<Element> next;
        for (const auto& a : frontier)
            for (const auto& m : multipliers) {
                Element p = a * m;
                if (span.insert(to_row(p, index))) {
                    kept.push_back(p);
                    next.push_back(std::move(p));
                }
            }
        frontier = std::move(next);
    }

    // Stability: one more full round over every independent element must
    // add nothing to the span reached within the degree bound.
    const int rank = span.rank();
    bool stable = true;
    for (const auto& a : kept)
        for (const auto& m : multipliers)
            if (span.insert(to_row(a * m, index))) stable = false;

    return CenterRankResult{rank, stable};
}

}  // namespace partalg
