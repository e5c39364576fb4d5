// Acceptance gate: every release-blocking property of the library, checked
// end to end, one line per criterion. Exits 0 only if every line passes.

#include <algorithm>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "partalg/blocks.hpp"
#include "partalg/combinatorics.hpp"
#include "partalg/diagram.hpp"
#include "partalg/element.hpp"
#include "partalg/jm.hpp"
#include "partalg/supersym.hpp"

using namespace partalg;

namespace {

// Independent oracle: the number of set partitions of an n-set, counted by
// enumerating restricted-growth strings (a_0 = 0, a_i <= 1 + max previous).
long long set_partition_count(int n) {
    std::function<long long(int, int)> extend = [&](int position, int next_label) {
        if (position == n) return 1LL;
        long long total = 0;
        for (int label = 0; label <= next_label; ++label)
            total += extend(position + 1, std::max(next_label, label + 1));
        return total;
    };
    return n == 0 ? 1 : extend(1, 1);
}

Rational random_rational(std::mt19937& rng) {
    const int numerator = static_cast<int>(rng() % 41) - 20;
    const int denominator = 1 + static_cast<int>(rng() % 9);
    return Rational(numerator, denominator);
}

std::vector<Rational> random_values(int r, std::mt19937& rng) {
    std::vector<Rational> values;
    values.reserve(r);
    for (int i = 0; i < r; ++i) values.push_back(random_rational(rng));
    return values;
}

bool diagram_product_example(std::string& detail) {
    const Diagram pi(5, {{1, 2, 3, -2}, {4, -1, -4}, {5, -5}, {-3}});
    const Diagram gamma(5, {{1, -1, -2}, {2, -4}, {3}, {4}, {5, -3, -5}});
    const ComposeResult result = compose(pi, gamma);
    const Diagram expected(5, {{1, 2, 3, -4}, {4, -1, -2}, {5, -3, -5}});
    detail = "product " + result.product.str() + ", removed " +
             std::to_string(result.removed);
    return result.product == expected && result.removed == 1;
}

bool relation_catalogue(std::string& detail) {
    int checked = 0, failed = 0;
    for (int k = 1; k <= 3; ++k) {
        JMCache cache(Ring{k, Mode::poly});
        for (int r = 0; r <= 2 * k; ++r) {
            const RelationReport report = verify_relations(r, cache);
            for (const auto& check : report.checks) {
                ++checked;
                if (!check.pass) ++failed;
            }
        }
    }
    detail = std::to_string(checked) + " identities, " + std::to_string(failed) +
             " failures";
    return checked > 0 && failed == 0;
}

bool centrality(std::string& detail) {
    int checked = 0, failed = 0;
    for (int r = 0; r <= 6; ++r) {
        JMCache cache(Ring{(r + 1) / 2, Mode::poly});
        const CentralityReport report = check_centrality(r, 4, cache);
        for (const auto& check : report.checks) {
            ++checked;
            if (!check.pass) ++failed;
        }
    }
    detail = std::to_string(checked) + " commutator checks, " + std::to_string(failed) +
             " failures";
    return checked == 35 && failed == 0;
}

bool center_rank_values(std::string& detail) {
    const CenterRankResult two = center_rank(2, Rational(5));
    const CenterRankResult three = center_rank(3, Rational(7));
    detail = "k=2: rank " + std::to_string(two.rank) +
             (two.stable ? " stable" : " unstable") + "; k=3: rank " +
             std::to_string(three.rank) + (three.stable ? " stable" : " unstable");
    return two.rank == 4 && two.stable && three.rank == 7 && three.stable;
}

bool block_crosscheck_sweep(std::string& detail) {
    int cases = 0;
    for (int k = 0; k <= 6; ++k) {
        std::vector<Rational> deltas{Rational(1, 2), Rational(3, 2)};
        for (int d = -4; d <= 10; ++d) deltas.push_back(Rational(d));
        for (const auto& delta : deltas) {
            if (!block_crosscheck(k, delta)) {
                detail = "mismatch at k=" + std::to_string(k) + ", delta=" +
                         format_rational(delta);
                return false;
            }
            ++cases;
        }
    }
    detail = std::to_string(cases) + " (k, delta) points agree";
    return true;
}

bool pair_invariance(std::string& detail) {
    int pairs = 0;
    for (int k = 0; k <= 6; ++k) {
        for (int d = -6; d <= 10; ++d) {
            const Rational delta(d);
            const auto labels = label_set(k, delta).members;
            for (const auto& mu : labels) {
                for (const auto& lam : labels) {
                    if (!is_delta_pair(mu.shape, lam.shape, delta)) continue;
                    ++pairs;
                    if (!genfun_equal(genfun(mu, delta), genfun(lam, delta))) {
                        detail = "pair " + mu.shape.str() + " -> " + lam.shape.str() +
                                 " at delta=" + std::to_string(d);
                        return false;
                    }
                }
            }
        }
    }
    detail = std::to_string(pairs) + " pairs share their generating function";
    return pairs > 0;
}

bool reduced_form(std::string& detail) {
    int cases = 0;
    for (int k = 0; k <= 5; ++k) {
        std::vector<Rational> deltas{Rational(1, 2), Rational(-3, 2)};
        for (int d = -2 * k - 4; d <= 2 * k + 4; ++d) deltas.push_back(Rational(d));
        for (const auto& delta : deltas) {
            for (const auto& label : label_set(k, delta).members) {
                if (!reduced_form_check(label, delta)) {
                    detail = "mismatch at k=" + std::to_string(k) + ", delta=" +
                             format_rational(delta) + ", shape " + label.shape.str();
                    return false;
                }
                ++cases;
            }
        }
    }
    detail = std::to_string(cases) + " labels match the closed form";
    return true;
}

bool generic_distinct(std::string& detail) {
    int comparisons = 0;
    for (int k = 1; k <= 5; ++k) {
        const std::vector<Rational> deltas{Rational(-1), Rational(2 * k - 1),
                                           Rational(1, 2)};
        for (const auto& delta : deltas) {
            const auto labels = label_set(k, delta).members;
            std::vector<BlockGenFun> values;
            values.reserve(labels.size());
            for (const auto& v : labels) values.push_back(genfun(v, delta));
            for (std::size_t i = 0; i < values.size(); ++i) {
                for (std::size_t j = i + 1; j < values.size(); ++j) {
                    ++comparisons;
                    if (genfun_equal(values[i], values[j])) {
                        detail = "collision at k=" + std::to_string(k) + ", delta=" +
                                 format_rational(delta) + ": " + labels[i].shape.str() +
                                 " vs " + labels[j].shape.str();
                        return false;
                    }
                }
            }
        }
    }
    detail = std::to_string(comparisons) + " label pairs separated";
    return true;
}

bool path_square_sum(std::string& detail) {
    const long long expected[] = {2, 15, 203, 4140};
    std::string sums;
    for (int k = 1; k <= 4; ++k) {
        long long sum = 0;
        for (const auto& v : vertices_at(2 * k, k)) {
            const long long count = count_paths(v, k);
            sum += count * count;
        }
        const long long oracle = set_partition_count(2 * k);
        if (oracle != expected[k - 1]) {
            detail = "oracle disagrees with the frozen value at 2k=" +
                     std::to_string(2 * k);
            return false;
        }
        if (sum != oracle) {
            detail = "square sum " + std::to_string(sum) + " != " +
                     std::to_string(oracle) + " at 2k=" + std::to_string(2 * k);
            return false;
        }
        if (!sums.empty()) sums += ", ";
        sums += std::to_string(sum);
    }
    detail = "square sums " + sums;
    return true;
}

bool standard_path_contents(std::string& detail) {
    const Rational half(1, 2);
    int cases = 0;
    for (int level = 1; level <= 10; ++level) {
        for (const auto& target : vertices_at(level, 5)) {
            const auto contents = path_contents(standard_path(target));
            std::multiset<ContentValue> odd, even;
            for (std::size_t i = 0; i < contents.size(); ++i) {
                if ((i + 1) % 2 == 1)
                    odd.insert(contents[i]);
                else
                    even.insert(contents[i]);
            }

            std::multiset<ContentValue> want_odd, want_even;
            for (int i = 0; i < target.l; ++i) {
                want_odd.insert({Rational(0), -half});
                want_even.insert({Rational(0), half});
            }
            const int size = target.shape.size();
            const int odd_top = level % 2 == 1 ? size : size - 1;
            for (int i = 0; i <= odd_top; ++i) want_odd.insert({Rational(i), -half});
            for (const auto& [diagonal, mult] : diagonal_datum(target.shape).mult)
                for (int copies = 0; copies < mult; ++copies)
                    want_even.insert({Rational(diagonal), -half});

            if (odd != want_odd || even != want_even) {
                detail = "mismatch at level " + std::to_string(level) + ", label (" +
                         target.shape.str() + "," + std::to_string(target.l) + ")";
                return false;
            }
            ++cases;
        }
    }
    detail = std::to_string(cases) + " labels match the closed form";
    return true;
}

bool supersymmetry(std::string& detail) {
    std::mt19937 rng(987654321);
    const Rational one(1);
    int checks = 0;

    // Parity symmetry: any permutation fixing the odd/even position classes.
    for (int trial = 0; trial < 100; ++trial) {
        const int r = static_cast<int>(rng() % 9);
        const int n = static_cast<int>(rng() % 9);
        const auto values = random_values(r, rng);
        auto permuted = values;
        for (std::size_t start = 0; start < 2; ++start) {
            std::vector<Rational> slot;
            for (std::size_t i = start; i < permuted.size(); i += 2)
                slot.push_back(permuted[i]);
            std::shuffle(slot.begin(), slot.end(), rng);
            std::size_t j = 0;
            for (std::size_t i = start; i < permuted.size(); i += 2)
                permuted[i] = slot[j++];
        }
        ++checks;
        if (eval_l(n, values, one) != eval_l(n, permuted, one)) {
            detail = "parity failure at r=" + std::to_string(r) + ", n=" +
                     std::to_string(n);
            return false;
        }
    }

    // Cancellation: a leading (c, -c) pair never changes the value.
    for (int trial = 0; trial < 100; ++trial) {
        const int r = static_cast<int>(rng() % 7);
        const int n = static_cast<int>(rng() % 9);
        const auto values = random_values(r, rng);
        const Rational c = random_rational(rng);
        std::vector<Rational> extended{c, -c};
        extended.insert(extended.end(), values.begin(), values.end());
        ++checks;
        if (eval_l(n, extended, one) != eval_l(n, values, one)) {
            detail = "cancellation failure at r=" + std::to_string(r) + ", n=" +
                     std::to_string(n);
            return false;
        }
    }

    // Four-variable closed forms for l_1, l_2, l_3.
    for (int trial = 0; trial < 20; ++trial) {
        const auto v = random_values(4, rng);
        const Rational x1 = v[0], x2 = v[1], x3 = v[2], x4 = v[3];
        const Rational l1 = x1 + x2 + x3 + x4;
        const Rational l2 =
            (x2 * x2 + x2 * x4 + x4 * x4) + (x1 + x3) * (x2 + x4) + x1 * x3;
        const Rational l3 = (x2 * x2 * x2 + x2 * x2 * x4 + x2 * x4 * x4 + x4 * x4 * x4) +
                            (x1 + x3) * (x2 * x2 + x2 * x4 + x4 * x4) +
                            x1 * x3 * (x2 + x4);
        checks += 3;
        if (eval_l(1, v, one) != l1 || eval_l(2, v, one) != l2 ||
            eval_l(3, v, one) != l3) {
            detail = "four-variable closed form failure";
            return false;
        }
    }

    detail = std::to_string(checks) + " evaluations agree";
    return true;
}

bool single_block_collapse(std::string& detail) {
    const Rational delta(1);
    const std::vector<GraphVertex> labels{{Shape(), 3, 6},
                                          {Shape({2}), 1, 6},
                                          {Shape({2, 1}), 0, 6}};
    for (const auto& label : labels) {
        const BlockGenFun g = genfun(label, delta);
        if (!g.num.empty() || !g.den.empty()) {
            detail = "label (" + label.shape.str() + "," + std::to_string(label.l) +
                     ") does not reduce to 1";
            return false;
        }
    }
    detail = "all three labels reduce to the constant 1";
    return genfun_equal(genfun(labels[0], delta), genfun(labels[1], delta)) &&
           genfun_equal(genfun(labels[1], delta), genfun(labels[2], delta));
}

}  // namespace

int main() {
    struct Criterion {
        std::string name;
        std::function<bool(std::string&)> check;
    };
    const std::vector<Criterion> criteria{
        {"worked diagram product at k=5", diagram_product_example},
        {"relation catalogue, symbolic delta, levels <= 6", relation_catalogue},
        {"centrality of l_0..l_4 at levels <= 6, symbolic delta", centrality},
        {"center rank 4 at (k=2, delta=5) and 7 at (k=3, delta=7)", center_rank_values},
        {"chain vs generating-function blocks, k <= 6", block_crosscheck_sweep},
        {"successor pairs share generating functions, k <= 6", pair_invariance},
        {"reduced generating-function closed form, k <= 5", reduced_form},
        {"distinct generating functions at semisimple delta, k <= 5", generic_distinct},
        {"path-count square sums equal set-partition counts, k <= 4", path_square_sum},
        {"standard-path contents match the closed form, levels <= 10",
         standard_path_contents},
        {"supersymmetry of l_n: parity, cancellation, closed forms", supersymmetry},
        {"single-block collapse at delta=1, k=3", single_block_collapse},
    };

    int failed = 0;
    for (std::size_t i = 0; i < criteria.size(); ++i) {
        const auto start = std::chrono::steady_clock::now();
        std::string detail;
        bool ok = false;
        try {
            ok = criteria[i].check(detail);
        } catch (const std::exception& e) {
            ok = false;
            detail = std::string("exception: ") + e.what();
        }
        const double seconds =
            std::chrono::duration<double>(std::chrono::steady_clock::now() - start)
                .count();
        if (!ok) ++failed;
        std::cout << '[' << std::setw(2) << i + 1 << "] " << (ok ? "PASS" : "FAIL")
                  << ' ' << criteria[i].name << ": " << detail << " ["
                  << std::fixed << std::setprecision(2) << seconds << "s]\n";
    }

    std::cout << "RESULT: " << criteria.size() - failed << '/' << criteria.size()
              << " criteria pass\n";
    return failed == 0 ? 0 : 1;
}
