#include "partalg/blocks.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

namespace partalg {

namespace {

bool is_integer(const Rational& q) { return denominator(q) == 1; }

void require_even_label(const GraphVertex& v) {
    if (v.level < 0 || v.level % 2 != 0 || v.l < 0 ||
        v.shape.size() + v.l != v.level / 2) {
        throw std::invalid_argument("label must be a consistent vertex on an even level");
    }
}

void require_block_bound(int k, int bound) {
    if (k < 0) {
        throw std::invalid_argument("k must be nonnegative");
    }
    if (k > bound) {
        throw std::runtime_error("k exceeds the block enumeration bound");
    }
}

std::multiset<int> content_multiset(const Shape& s) {
    std::multiset<int> out;
    for (const auto& [diag, mult] : diagonal_datum(s).mult) {
        for (int copies = 0; copies < mult; ++copies) out.insert(diag);
    }
    return out;
}

}  // namespace

LabelSet label_set(int k, const Rational& delta) {
    if (k < 0) {
        throw std::invalid_argument("k must be nonnegative");
    }
    LabelSet labels{k, delta, vertices_at(2 * k, k)};
    if (delta == 0) {
        const GraphVertex excluded{Shape(), k, 2 * k};
        labels.members.erase(
            std::remove(labels.members.begin(), labels.members.end(), excluded),
            labels.members.end());
    }
    return labels;
}

bool is_delta_pair(const Shape& mu, const Shape& lam, const Rational& delta) {
    if (!is_integer(delta) || !shape_contains(lam, mu)) return false;
    int strip_row = -1;
    for (int row = 0; row < lam.rows(); ++row) {
        const int inner = row < mu.rows() ? mu.parts()[row] : 0;
        if (lam.parts()[row] == inner) continue;
        if (strip_row >= 0) return false;
        strip_row = row;
    }
    if (strip_row < 0) return false;
    const int last_content = (lam.parts()[strip_row] - 1) - strip_row;
    return Rational(last_content) == delta - mu.size();
}

std::optional<Shape> delta_successor(const Shape& tau, const Rational& delta, int k) {
    if (!is_integer(delta) || delta < -4 * k - 4 || delta > 4 * k + 4) return std::nullopt;
    const int d = numerator(delta).convert_to<int>();
    const int want_content = d - tau.size();
    for (int row = 0; row <= tau.rows(); ++row) {
        const int current = row < tau.rows() ? tau.parts()[row] : 0;
        const int grown = want_content + row + 1;  // column of the strip's last box
        if (grown <= current) continue;
        if (row > 0 && grown > tau.parts()[row - 1]) continue;
        if (tau.size() + (grown - current) > k) continue;
        std::vector<int> parts = tau.parts();
        if (row < tau.rows()) {
            parts[row] = grown;
        } else {
            parts.push_back(grown);
        }
        return Shape(parts);
    }
    return std::nullopt;
}

BlockPartition chain_classes(int k, const Rational& delta, int bound) {
    require_block_bound(k, bound);
    const LabelSet labels = label_set(k, delta);
    std::map<Shape, Shape> next;
    std::set<Shape> has_pred;
    for (const auto& member : labels.members) {
        const auto succ = delta_successor(member.shape, delta, k);
        if (succ) {
            next.emplace(member.shape, *succ);
            has_pred.insert(*succ);
        }
    }
    BlockPartition blocks{BlockMethod::chains, {}};
    for (const auto& member : labels.members) {
        if (has_pred.count(member.shape)) continue;
        std::vector<GraphVertex> chain;
        Shape cur = member.shape;
        while (true) {
            chain.push_back({cur, k - cur.size(), 2 * k});
            const auto it = next.find(cur);
            if (it == next.end()) break;
            cur = it->second;
        }
        blocks.classes.push_back(std::move(chain));
    }
    return blocks;
}

BlockPartition genfun_classes(int k, const Rational& delta, int bound) {
    require_block_bound(k, bound);
    const LabelSet labels = label_set(k, delta);
    BlockPartition blocks{BlockMethod::genfun, {}};
    std::vector<BlockGenFun> reps;
    for (const auto& member : labels.members) {
        const BlockGenFun value = genfun(member, delta);
        bool placed = false;
        for (size_t i = 0; i < reps.size(); ++i) {
            if (genfun_equal(reps[i], value)) {
                blocks.classes[i].push_back(member);
                placed = true;
                break;
            }
        }
        if (!placed) {
            reps.push_back(value);
            blocks.classes.push_back({member});
        }
    }
    return blocks;
}

BlockGenFun genfun(const GraphVertex& v, const Rational& delta) {
    require_even_label(v);
    const int k = v.level / 2;
    BlockGenFun g{delta, {}, {}};
    for (int i = 0; i <= k - v.l - 1; ++i) g.num.insert(i);
    g.den = content_multiset(v.shape);
    // A num i and a den j cancel when i + j = delta; the i values are
    // distinct, so each one empties at most one copy from a distinct bucket.
    if (is_integer(delta) && delta >= -2 * k - 1 && delta <= 2 * k + 1) {
        const int d = numerator(delta).convert_to<int>();
        for (auto it = g.num.begin(); it != g.num.end();) {
            const auto hit = g.den.find(d - *it);
            if (hit != g.den.end()) {
                g.den.erase(hit);
                it = g.num.erase(it);
            } else {
                ++it;
            }
        }
    }
    return g;
}

bool genfun_equal(const BlockGenFun& a, const BlockGenFun& b) {
    if (a.delta != b.delta) {
        throw std::invalid_argument("generating functions use different delta");
    }
    return a.num == b.num && a.den == b.den;
}

bool reduced_form_check(const GraphVertex& v, const Rational& delta) {
    const BlockGenFun g = genfun(v, delta);
    const int k = v.level / 2;
    const int h = v.shape.rows() > 0 ? v.shape.rows() - 1 : 0;

    std::multiset<int> full_num;
    for (int i = 0; i <= k - v.l - 1; ++i) full_num.insert(i);
    const std::multiset<int> full_den = content_multiset(v.shape);

    if (!is_integer(delta) || delta < -h || delta > 2 * k - 2) {
        return g.num == full_num && g.den == full_den;
    }
    if (h >= 1 && delta <= -1) {
        const int d = numerator(delta).convert_to<int>();
        std::multiset<int> want_num;
        for (int i = d + h + 1; i <= k - v.l - 1; ++i) want_num.insert(i);
        std::multiset<int> want_den;
        for (const auto& [diag, mult] : diagonal_datum(v.shape).mult) {
            const int copies = diag <= d ? mult - 1 : mult;
            for (int c = 0; c < copies; ++c) want_den.insert(diag);
        }
        return g.num == want_num && g.den == want_den;
    }
    return true;
}

bool block_crosscheck(int k, const Rational& delta, int bound) {
    return chain_classes(k, delta, bound).classes ==
           genfun_classes(k, delta, bound).classes;
}

}  // namespace partalg
