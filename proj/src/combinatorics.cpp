#include "partalg/combinatorics.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>

namespace partalg {

Shape::Shape(std::vector<int> parts) : parts_(std::move(parts)) {
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (parts_[i] < 1) {
            throw std::invalid_argument("shape parts must be positive");
        }
        if (i > 0 && parts_[i] > parts_[i - 1]) {
            throw std::invalid_argument("shape parts must be weakly decreasing");
        }
    }
}

int Shape::size() const {
    int total = 0;
    for (int p : parts_) total += p;
    return total;
}

std::string Shape::str() const {
    std::ostringstream out;
    out << '(';
    for (size_t i = 0; i < parts_.size(); ++i) {
        if (i > 0) out << ',';
        out << parts_[i];
    }
    out << ')';
    return out.str();
}

Shape Shape::parse(const std::string& text) {
    std::string cleaned;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) cleaned += c;
    }
    if (!cleaned.empty() && cleaned.front() == '(' && cleaned.back() == ')') {
        cleaned = cleaned.substr(1, cleaned.size() - 2);
    }
    std::vector<int> parts;
    if (!cleaned.empty()) {
        std::istringstream in(cleaned);
        std::string token;
        while (std::getline(in, token, ',')) {
            size_t consumed = 0;
            int value = 0;
            try {
                value = std::stoi(token, &consumed);
            } catch (const std::exception&) {
                throw std::invalid_argument("invalid shape part: " + token);
            }
            if (consumed != token.size()) {
                throw std::invalid_argument("invalid shape part: " + token);
            }
            parts.push_back(value);
        }
        if (cleaned.back() == ',') {
            throw std::invalid_argument("trailing comma in shape");
        }
    }
    return Shape(parts);
}

namespace {

void emit_partitions(int remaining, int max_part, std::vector<int>& prefix,
                     std::vector<Shape>& out) {
    if (remaining == 0) {
        out.push_back(Shape(prefix));
        return;
    }
    for (int first = std::min(remaining, max_part); first >= 1; --first) {
        prefix.push_back(first);
        emit_partitions(remaining - first, first, prefix, out);
        prefix.pop_back();
    }
}

}  // namespace

std::vector<Shape> partitions_of(int n, int bound) {
    if (n < 0) {
        throw std::invalid_argument("partition size must be nonnegative");
    }
    if (n > bound) {
        throw std::runtime_error("partition size exceeds enumeration bound");
    }
    std::vector<Shape> out;
    std::vector<int> prefix;
    emit_partitions(n, n, prefix, out);
    return out;
}

bool shape_contains(const Shape& outer, const Shape& inner) {
    if (inner.rows() > outer.rows()) return false;
    for (int row = 0; row < inner.rows(); ++row) {
        if (inner.parts()[row] > outer.parts()[row]) return false;
    }
    return true;
}

std::vector<Shape> shapes_with_box_added(const Shape& s) {
    const auto& parts = s.parts();
    std::vector<Shape> out;
    for (int row = 0; row <= s.rows(); ++row) {
        const int current = row < s.rows() ? parts[row] : 0;
        const int above = row > 0 ? parts[row - 1] : current + 1;
        if (current >= above) continue;
        std::vector<int> grown = parts;
        if (row < s.rows()) {
            grown[row] += 1;
        } else {
            grown.push_back(1);
        }
        out.push_back(Shape(grown));
    }
    return out;
}

std::vector<Shape> shapes_with_box_removed(const Shape& s) {
    const auto& parts = s.parts();
    std::vector<Shape> out;
    for (int row = 0; row < s.rows(); ++row) {
        const int below = row + 1 < s.rows() ? parts[row + 1] : 0;
        if (parts[row] <= below) continue;
        std::vector<int> shrunk = parts;
        shrunk[row] -= 1;
        if (shrunk[row] == 0) shrunk.pop_back();
        out.push_back(Shape(shrunk));
    }
    return out;
}

DiagonalDatum diagonal_datum(const Shape& s) {
    DiagonalDatum datum;
    if (s.rows() == 0) return datum;
    datum.lo = -(s.rows() - 1);
    datum.hi = s.parts()[0] - 1;
    for (int row = 0; row < s.rows(); ++row) {
        for (int col = 0; col < s.parts()[row]; ++col) {
            datum.mult[col - row] += 1;
        }
    }
    return datum;
}

bool GraphVertex::operator<(const GraphVertex& other) const {
    if (level != other.level) return level < other.level;
    if (l != other.l) return l < other.l;
    return shape < other.shape;
}

namespace {

void require_vertex(const GraphVertex& v) {
    if (v.level < 0 || v.l < 0) {
        throw std::invalid_argument("vertex level and l must be nonnegative");
    }
    if (v.shape.size() + v.l != v.level / 2) {
        throw std::invalid_argument("vertex violates |shape| + l = floor(level/2)");
    }
}

// Predecessors on the previous level, inverting the edge rules.
std::vector<GraphVertex> edges_into(const GraphVertex& v) {
    std::vector<GraphVertex> preds;
    const int below = v.level - 1;
    if (v.level % 2 == 1) {
        // Source level is even: the vertex was kept, or a box was removed.
        preds.push_back({v.shape, v.l, below});
        if (v.l >= 1) {
            for (const auto& s : shapes_with_box_added(v.shape)) {
                preds.push_back({s, v.l - 1, below});
            }
        }
    } else {
        // Source level is odd: l was raised, or a box was added.
        if (v.l >= 1) {
            preds.push_back({v.shape, v.l - 1, below});
        }
        for (const auto& s : shapes_with_box_removed(v.shape)) {
            preds.push_back({s, v.l, below});
        }
    }
    return preds;
}

void build_paths(const GraphVertex& v, std::vector<GraphVertex>& suffix,
                 std::vector<BranchPath>& out) {
    if (v.level == 0) {
        if (v.shape.rows() != 0 || v.l != 0) return;
        BranchPath path;
        path.vertices.push_back(v);
        path.vertices.insert(path.vertices.end(), suffix.rbegin(), suffix.rend());
        out.push_back(std::move(path));
        return;
    }
    suffix.push_back(v);
    for (const auto& pred : edges_into(v)) {
        build_paths(pred, suffix, out);
    }
    suffix.pop_back();
}

}  // namespace

std::vector<GraphVertex> vertices_at(int level, int ambient_k) {
    if (level < 0 || ambient_k < 0 || level > 2 * ambient_k) {
        throw std::out_of_range("level must lie between 0 and 2k");
    }
    const int half = level / 2;
    std::vector<GraphVertex> out;
    for (int size = 0; size <= half; ++size) {
        for (const auto& s : partitions_of(size)) {
            out.push_back({s, half - size, level});
        }
    }
    return out;
}

std::vector<GraphVertex> edges_from(const GraphVertex& v) {
    require_vertex(v);
    std::vector<GraphVertex> out;
    const int above = v.level + 1;
    if (v.level % 2 == 0) {
        out.push_back({v.shape, v.l, above});
        for (const auto& s : shapes_with_box_removed(v.shape)) {
            out.push_back({s, v.l + 1, above});
        }
    } else {
        out.push_back({v.shape, v.l + 1, above});
        for (const auto& s : shapes_with_box_added(v.shape)) {
            out.push_back({s, v.l, above});
        }
    }
    return out;
}

std::vector<BranchPath> enumerate_paths(const GraphVertex& target, int bound) {
    require_vertex(target);
    if (target.level > 2 * bound) {
        throw std::runtime_error("path level exceeds enumeration bound");
    }
    std::vector<BranchPath> out;
    std::vector<GraphVertex> suffix;
    build_paths(target, suffix, out);
    return out;
}

long long count_paths(const GraphVertex& target, int bound) {
    require_vertex(target);
    if (target.level > 2 * bound) {
        throw std::runtime_error("path level exceeds enumeration bound");
    }
    std::map<std::pair<Shape, int>, long long> counts;
    counts[{Shape(), 0}] = 1;
    for (int level = 0; level < target.level; ++level) {
        std::map<std::pair<Shape, int>, long long> next;
        for (const auto& [key, ways] : counts) {
            const GraphVertex v{key.first, key.second, level};
            for (const auto& w : edges_from(v)) {
                next[{w.shape, w.l}] += ways;
            }
        }
        counts = std::move(next);
    }
    const auto found = counts.find({target.shape, target.l});
    return found == counts.end() ? 0 : found->second;
}

BranchPath standard_path(const GraphVertex& target) {
    require_vertex(target);
    const auto& parts = target.shape.parts();
    // Shape holding the first `boxes` boxes of the target in row-major order.
    const auto prefix_shape = [&parts](int boxes) {
        std::vector<int> rows;
        for (int p : parts) {
            const int take = std::min(p, boxes);
            if (take == 0) break;
            rows.push_back(take);
            boxes -= take;
        }
        return Shape(rows);
    };
    BranchPath path;
    for (int level = 0; level <= target.level; ++level) {
        const int half = level / 2;
        if (half <= target.l) {
            path.vertices.push_back({Shape(), half, level});
        } else {
            path.vertices.push_back({prefix_shape(half - target.l), target.l, level});
        }
    }
    return path;
}

namespace {

// Content of the single box by which `larger` exceeds `smaller`.
int changed_box_content(const Shape& larger, const Shape& smaller) {
    const auto& big = larger.parts();
    const auto& small = smaller.parts();
    if (big.size() != small.size() && big.size() != small.size() + 1) {
        throw std::invalid_argument("shapes do not differ by a single box");
    }
    int row = -1;
    for (size_t i = 0; i < big.size(); ++i) {
        const int base = i < small.size() ? small[i] : 0;
        if (big[i] == base) continue;
        if (big[i] == base + 1 && row < 0) {
            row = static_cast<int>(i);
            continue;
        }
        throw std::invalid_argument("shapes do not differ by a single box");
    }
    if (row < 0) {
        throw std::invalid_argument("shapes do not differ by a single box");
    }
    return (big[row] - 1) - row;
}

}  // namespace

std::vector<ContentValue> path_contents(const BranchPath& path) {
    const auto& vs = path.vertices;
    if (vs.empty()) {
        throw std::invalid_argument("path must contain the level-0 vertex");
    }
    if (vs[0].level != 0 || vs[0].shape.rows() != 0 || vs[0].l != 0) {
        throw std::invalid_argument("path must start at the empty vertex on level 0");
    }
    for (const auto& v : vs) require_vertex(v);
    const Rational half(1, 2);
    std::vector<ContentValue> out;
    for (size_t i = 1; i < vs.size(); ++i) {
        const auto& prev = vs[i - 1];
        const auto& cur = vs[i];
        if (cur.level != prev.level + 1) {
            throw std::invalid_argument("path levels must be consecutive");
        }
        const bool kept = cur.shape == prev.shape;
        if (cur.level % 2 == 0) {
            if (kept && cur.l == prev.l + 1) {
                out.push_back({Rational(-cur.shape.size()), half});
            } else if (!kept && cur.l == prev.l) {
                out.push_back({Rational(changed_box_content(cur.shape, prev.shape)), -half});
            } else {
                throw std::invalid_argument("consecutive vertices are not joined by an edge");
            }
        } else {
            if (kept && cur.l == prev.l) {
                out.push_back({Rational(cur.shape.size()), -half});
            } else if (!kept && cur.l == prev.l + 1) {
                out.push_back({Rational(-changed_box_content(prev.shape, cur.shape)), half});
            } else {
                throw std::invalid_argument("consecutive vertices are not joined by an edge");
            }
        }
    }
    return out;
}

}  // namespace partalg
