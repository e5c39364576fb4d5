#pragma once

#include <map>
#include <string>
#include <vector>

#include "partalg/element.hpp"

namespace partalg {

// Memoized recursive construction of the interchanging elements sigma_i
// (2 <= i <= 2k-1) and the Jucys-Murphy elements L_i (1 <= i <= 2k) inside
// A_{2k}. The recursion is implemented exactly as defined, with no algebraic
// simplification; the relation verifier below is the check that the
// transcription is right.
//
// The memo tables are the only mutable state: confine one cache instance to
// one thread (or guard it externally); returned references stay valid for
// the cache's lifetime since map nodes are stable.
class JMCache {
public:
    explicit JMCache(Ring ring) : ring_(std::move(ring)) {}

    const Ring& ring() const { return ring_; }
    int k() const { return ring_.k; }

    const Element& sigma(int i);  // 2 <= i <= 2k-1
    const Element& L(int i);      // 1 <= i <= 2k
    Element N(int i);             // L(i) - (delta/2) * identity

private:
    Element compute_sigma(int i);
    Element compute_L(int i);

    Ring ring_;
    std::map<int, Element> sigma_memo_;
    std::map<int, Element> l_memo_;
};

// One verified identity instance: a stable relation identifier, the index
// assignment, and whether the exact Element identity held.
struct RelationCheck {
    std::string relation;
    std::map<std::string, int> indices;
    bool pass = false;
};

struct RelationReport {
    int level = 0;
    std::vector<RelationCheck> checks;

    bool all_pass() const {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return true;
    }
};

// Exhaustively checks the relation catalogue for every index valid at level
// r: generator relations, sigma/L properties (star-invariance, involutivity,
// commutation with lower levels, centrality of the L-sum), the mixed
// sigma/L/e identities, the N-commutation table, the skein-style recursions
// for N, and the e/N antisymmetry. Failures become report entries, never
// exceptions.
RelationReport verify_relations(int r, JMCache& cache);

}  // namespace partalg
