#include "partalg/diagram.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>
#include <stdexcept>

namespace partalg {

namespace {

// Position of vertex v in the total order 1 < ... < k < 1' < ... < k'.
int vertex_rank(int v, int k) { return v > 0 ? v - 1 : k + (-v) - 1; }

struct UnionFind {
    std::vector<int> parent;

    explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }

    int find(int x) {
        while (parent[x] != x) {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        return x;
    }

    void unite(int a, int b) { parent[find(a)] = find(b); }
};

}  // namespace

Diagram::Diagram(int k, std::vector<std::vector<int>> raw_blocks) : k_(k) {
    if (k < 0) throw std::invalid_argument("negative strand count");
    std::vector<char> seen(2 * k, 0);
    for (auto& block : raw_blocks) {
        if (block.empty()) continue;
        for (int v : block) {
            if (v == 0 || v > k || v < -k)
                throw std::invalid_argument("vertex out of range: " + std::to_string(v));
            if (seen[vertex_rank(v, k)])
                throw std::invalid_argument("duplicate vertex: " + std::to_string(v));
            seen[vertex_rank(v, k)] = 1;
        }
        std::sort(block.begin(), block.end(), [k](int a, int b) {
            return vertex_rank(a, k) < vertex_rank(b, k);
        });
        blocks_.push_back(std::move(block));
    }
    for (int pos = 0; pos < 2 * k; ++pos)
        if (!seen[pos])
            throw std::invalid_argument("missing vertex: " +
                                        std::to_string(pos < k ? pos + 1 : -(pos - k + 1)));
    std::sort(blocks_.begin(), blocks_.end(), [k](const auto& a, const auto& b) {
        return vertex_rank(a.front(), k) < vertex_rank(b.front(), k);
    });
}

Diagram Diagram::identity(int k) {
    std::vector<std::vector<int>> blocks;
    blocks.reserve(k);
    for (int i = 1; i <= k; ++i) blocks.push_back({i, -i});
    return Diagram(k, std::move(blocks));
}

bool Diagram::operator<(const Diagram& rhs) const {
    if (k_ != rhs.k_) return k_ < rhs.k_;
    return blocks_ < rhs.blocks_;
}

std::string Diagram::str() const {
    std::ostringstream out;
    bool first_block = true;
    for (const auto& block : blocks_) {
        if (!first_block) out << " | ";
        first_block = false;
        bool first_vertex = true;
        for (int v : block) {
            if (!first_vertex) out << ' ';
            first_vertex = false;
            if (v > 0)
                out << v;
            else
                out << -v << '\'';
        }
    }
    return out.str();
}

Diagram Diagram::parse(const std::string& text) {
    std::vector<std::vector<int>> blocks;
    int k = 0;
    std::size_t start = 0;
    while (start <= text.size()) {
        std::size_t bar = text.find('|', start);
        const std::string piece =
            text.substr(start, bar == std::string::npos ? std::string::npos : bar - start);
        std::istringstream in(piece);
        std::vector<int> block;
        std::string token;
        while (in >> token) {
            bool primed = false;
            if (!token.empty() && token.back() == '\'') {
                primed = true;
                token.pop_back();
            }
            int magnitude = 0;
            try {
                std::size_t used = 0;
                magnitude = std::stoi(token, &used);
                if (used != token.size()) throw std::invalid_argument(token);
            } catch (const std::exception&) {
                throw std::invalid_argument("malformed vertex token: " + token);
            }
            if (magnitude <= 0) throw std::invalid_argument("malformed vertex token: " + token);
            block.push_back(primed ? -magnitude : magnitude);
            k = std::max(k, magnitude);
        }
        if (!block.empty()) blocks.push_back(std::move(block));
        if (bar == std::string::npos) break;
        start = bar + 1;
    }
    if (blocks.empty()) throw std::invalid_argument("empty diagram text");
    return Diagram(k, std::move(blocks));
}

Diagram canonicalize(int k, std::vector<std::vector<int>> raw_blocks) {
    return Diagram(k, std::move(raw_blocks));
}

ComposeResult compose(const Diagram& pi, const Diagram& gamma) {
    if (pi.k() != gamma.k()) throw std::invalid_argument("strand count mismatch in compose");
    const int k = pi.k();

    // Nodes 0..k-1: top row of pi. Nodes k..2k-1: pi's bottom row glued to
    // gamma's top row. Nodes 2k..3k-1: bottom row of gamma.
    UnionFind uf(3 * k);
    for (const auto& block : pi.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) {
            auto node = [k](int v) { return v > 0 ? v - 1 : k + (-v) - 1; };
            uf.unite(node(block[0]), node(block[i]));
        }
    for (const auto& block : gamma.blocks())
        for (std::size_t i = 1; i < block.size(); ++i) {
            auto node = [k](int v) { return v > 0 ? k + v - 1 : 2 * k + (-v) - 1; };
            uf.unite(node(block[0]), node(block[i]));
        }

    // Group the outer vertices by component.
    std::vector<std::vector<int>> blocks;
    std::vector<int> root_to_block(3 * k, -1);
    auto outer_vertex = [k](int node) { return node < k ? node + 1 : -(node - 2 * k + 1); };
    for (int node = 0; node < 3 * k; ++node) {
        if (node >= k && node < 2 * k) continue;
        const int root = uf.find(node);
        if (root_to_block[root] < 0) {
            root_to_block[root] = static_cast<int>(blocks.size());
            blocks.emplace_back();
        }
        blocks[root_to_block[root]].push_back(outer_vertex(node));
    }

    int removed = 0;
    for (int node = k; node < 2 * k; ++node) {
        const int root = uf.find(node);
        if (root == node && root_to_block[root] < 0) ++removed;
    }

    return ComposeResult{Diagram(k, std::move(blocks)), removed};
}

Diagram involution(const Diagram& d) {
    std::vector<std::vector<int>> blocks = d.blocks();
    for (auto& block : blocks)
        for (int& v : block) v = -v;
    return Diagram(d.k(), std::move(blocks));
}

std::vector<Diagram> all_diagrams(int k, int bound) {
    if (k > bound)
        throw std::runtime_error("all_diagrams: k=" + std::to_string(k) +
                                 " exceeds enumeration bound " + std::to_string(bound));
    const int n = 2 * k;
    std::vector<Diagram> out;
    if (n == 0) {
        out.push_back(Diagram());
        return out;
    }

    // Restricted growth strings: a[0]=0 and a[i] <= 1 + max(a[0..i-1]).
    // Position p < k is vertex p+1, position p >= k is vertex (p-k+1)'; the
    // first-appearance labelling makes each string directly canonical.
    std::vector<int> a(n, 0);
    std::vector<int> maxima(n, 0);
    while (true) {
        const int block_count = *std::max_element(a.begin(), a.end()) + 1;
        std::vector<std::vector<int>> blocks(block_count);
        for (int p = 0; p < n; ++p)
            blocks[a[p]].push_back(p < k ? p + 1 : -(p - k + 1));
        out.push_back(Diagram(k, std::move(blocks)));

        int p = n - 1;
        while (p > 0 && a[p] > maxima[p - 1]) --p;
        if (p == 0) break;
        ++a[p];
        maxima[p] = std::max(maxima[p - 1], a[p]);
        for (int q = p + 1; q < n; ++q) {
            a[q] = 0;
            maxima[q] = maxima[p];
        }
    }
    return out;
}

}  // namespace partalg

std::size_t std::hash<partalg::Diagram>::operator()(const partalg::Diagram& d) const {
    std::size_t h = std::hash<int>{}(d.k());
    for (const auto& block : d.blocks()) {
        h ^= 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
        for (int v : block) h = h * 1099511628211ULL + static_cast<std::size_t>(v + 64);
    }
    return h;
}
