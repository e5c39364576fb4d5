#pragma once

#include <map>
#include <string>
#include <vector>

#include "partalg/scalar.hpp"

namespace partalg {

// An integer partition: weakly decreasing positive parts, empty = the zero partition.
class Shape {
  public:
    Shape() = default;
    explicit Shape(std::vector<int> parts);

    const std::vector<int>& parts() const { return parts_; }
    int size() const;  // total number of boxes
    int rows() const { return static_cast<int>(parts_.size()); }

    bool operator==(const Shape& other) const { return parts_ == other.parts_; }
    bool operator!=(const Shape& other) const { return !(*this == other); }
    bool operator<(const Shape& other) const { return parts_ < other.parts_; }

    // "(2,1)" for (2,1); "()" for the empty shape.
    std::string str() const;
    // Accepts "2,1", "(2,1)", "()" or ""; whitespace is ignored.
    static Shape parse(const std::string& text);

  private:
    std::vector<int> parts_;
};

// All partitions of n in descending lexicographic order, e.g. (3),(2,1),(1,1,1).
std::vector<Shape> partitions_of(int n, int bound = 40);

// Whether every box of inner lies in outer.
bool shape_contains(const Shape& outer, const Shape& inner);

// Shapes reachable by adding (resp. removing) one box, ordered by row index.
std::vector<Shape> shapes_with_box_added(const Shape& s);
std::vector<Shape> shapes_with_box_removed(const Shape& s);

// Multiplicity of each box content j - i (0-based column minus row) in a shape.
// For nonempty shapes the contents fill {lo..hi} with lo = -(rows-1) and
// hi = first part - 1; the empty shape has an empty datum (lo = 0, hi = -1).
struct DiagonalDatum {
    int lo = 0;
    int hi = -1;
    std::map<int, int> mult;
};

DiagonalDatum diagonal_datum(const Shape& s);

// Vertex of the branching graph: at level i it carries a shape and a count l
// of removed strands with |shape| + l = floor(i/2).
struct GraphVertex {
    Shape shape;
    int l = 0;
    int level = 0;

    bool operator==(const GraphVertex& other) const {
        return level == other.level && l == other.l && shape == other.shape;
    }
    bool operator!=(const GraphVertex& other) const { return !(*this == other); }
    bool operator<(const GraphVertex& other) const;
};

// All vertices on a level, ordered by shape size then partition order.
std::vector<GraphVertex> vertices_at(int level, int ambient_k);

// Out-neighbours on the next level.  From an even level one either keeps the
// vertex or removes a box (raising l); from an odd level one either raises l
// keeping the shape or adds a box.
std::vector<GraphVertex> edges_from(const GraphVertex& v);

// A path in the branching graph from (empty, 0) on level 0 to some vertex.
struct BranchPath {
    std::vector<GraphVertex> vertices;

    bool operator==(const BranchPath& other) const { return vertices == other.vertices; }
    bool operator!=(const BranchPath& other) const { return !(*this == other); }
};

// All paths from level 0 to the target, and their number via level-by-level
// dynamic programming.  Both guard target.level <= 2 * bound.
std::vector<BranchPath> enumerate_paths(const GraphVertex& target, int bound = 5);
long long count_paths(const GraphVertex& target, int bound = 5);

// The distinguished path that repeats across even/odd level pairs, stays at
// the empty shape for the first l shape steps, and then adds the boxes of the
// target shape in row-major order (the addable box of least row index among
// those lying inside the target).
BranchPath standard_path(const GraphVertex& target);

// The content vector (a + b*delta per step) of a path.  Step i gets
// delta/2 - |shape| (shape kept) or c(box) - delta/2 (box added) when i is
// even, and |shape| - delta/2 (shape kept) or delta/2 - c(box) (box removed)
// when i is odd.
std::vector<ContentValue> path_contents(const BranchPath& path);

}  // namespace partalg
