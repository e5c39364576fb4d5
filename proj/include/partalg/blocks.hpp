#pragma once

#include <optional>
#include <set>
#include <vector>

#include "partalg/combinatorics.hpp"
#include "partalg/scalar.hpp"

namespace partalg {

// Labels of the simple modules at a given k: the level-2k vertices, with the
// empty shape excluded exactly when delta = 0.
struct LabelSet {
    int k = 0;
    Rational delta;
    std::vector<GraphVertex> members;
};

LabelSet label_set(int k, const Rational& delta);

// Whether lam/mu is a nonempty one-row horizontal strip whose right-most box
// has content delta - |mu|.  Always false for non-integer delta.
bool is_delta_pair(const Shape& mu, const Shape& lam, const Rational& delta);

// The unique shape of size at most k forming a pair with tau, if any.  Each
// candidate row admits at most one strip end column, so a row scan suffices.
std::optional<Shape> delta_successor(const Shape& tau, const Rational& delta, int k);

enum class BlockMethod { chains, genfun };

// A partition of a label set into block classes; members within a class and
// the classes themselves follow the label-set enumeration order.
struct BlockPartition {
    BlockMethod method = BlockMethod::chains;
    std::vector<std::vector<GraphVertex>> classes;
};

// Orbits of the successor map: each class is a maximal chain, listed from the
// shape with no predecessor upward.
BlockPartition chain_classes(int k, const Rational& delta, int bound = 10);

// Classes of labels sharing the same reduced generating function.
BlockPartition genfun_classes(int k, const Rational& delta, int bound = 10);

// Factored generating function of a label: each num entry i stands for a
// factor 1 + (i - delta/2)t, each den entry j (a box content) for a factor
// 1 + (delta/2 - j)t.  For integer delta, one num i cancels one den j
// whenever i + j = delta, to exhaustion; trivial factors are kept.
struct BlockGenFun {
    Rational delta;
    std::multiset<int> num;
    std::multiset<int> den;
};

BlockGenFun genfun(const GraphVertex& v, const Rational& delta);

// Multiset equality of the reduced factors; both sides must share delta.
bool genfun_equal(const BlockGenFun& a, const BlockGenFun& b);

// Confirms the reduction against its closed form: no cancellation when delta
// lies outside {-h(shape),...,2k-2}, and for integer delta in
// {-h(shape),...,-1} a numerator starting at delta + h + 1 with denominator
// multiplicities dropped by one on diagonals <= delta.  Integer delta inside
// {0,...,2k-2} is outside both cases and passes vacuously.
bool reduced_form_check(const GraphVertex& v, const Rational& delta);

// Whether the chain partition and the generating-function partition agree.
bool block_crosscheck(int k, const Rational& delta, int bound = 10);

}  // namespace partalg
