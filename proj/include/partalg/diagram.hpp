#pragma once

#include <cstddef>
#include <functional>
#include <string>
#include <vector>

namespace partalg {

// A partition diagram: a set partition of the 2k vertices {1..k, 1'..k'}.
// Vertex v > 0 encodes v in the top row; v < 0 encodes |v|' in the bottom
// row. Canonical form: within a block, vertices sorted by the total order
// 1 < 2 < ... < k < 1' < 2' < ... < k'; blocks sorted by least vertex.
class Diagram {
public:
    Diagram() = default;  // k = 0: the empty diagram
    Diagram(int k, std::vector<std::vector<int>> raw_blocks);

    int k() const { return k_; }
    const std::vector<std::vector<int>>& blocks() const { return blocks_; }

    static Diagram identity(int k);

    bool operator==(const Diagram& rhs) const {
        return k_ == rhs.k_ && blocks_ == rhs.blocks_;
    }
    bool operator!=(const Diagram& rhs) const { return !(*this == rhs); }
    bool operator<(const Diagram& rhs) const;  // fixed total order for term maps

    // "1 2 3 2' | 4 1' 4' | 5 5' | 3'" -- blocks joined by " | ", primed
    // vertices carry a trailing apostrophe. parse infers k from the largest
    // vertex and accepts blocks/vertices in any order.
    std::string str() const;
    static Diagram parse(const std::string& text);

private:
    int k_ = 0;
    std::vector<std::vector<int>> blocks_;
};

// Validates and normalizes: same-partition inputs yield identical Diagrams.
Diagram canonicalize(int k, std::vector<std::vector<int>> raw_blocks);

struct ComposeResult {
    Diagram product;
    int removed = 0;  // components confined to the glued middle row
};

// Stack pi on top of gamma, identify pi's bottom row with gamma's top row,
// and read the induced partition off the outer rows.
ComposeResult compose(const Diagram& pi, const Diagram& gamma);

// The * map: reflect top <-> bottom. An involutive anti-automorphism.
Diagram involution(const Diagram& d);

// Every set partition of the 2k vertices, canonical, no duplicates; the
// count is the Bell number B(2k), so a bound guards the enumeration.
std::vector<Diagram> all_diagrams(int k, int bound = 4);

}  // namespace partalg

template <>
struct std::hash<partalg::Diagram> {
    std::size_t operator()(const partalg::Diagram& d) const;
};
