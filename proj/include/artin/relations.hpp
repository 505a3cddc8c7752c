#pragma once
//
// Defining-relation checker for morphisms out of the rank-n affine Artin
// group.  The Coxeter graph is the n-cycle: consecutive generators (and the
// wrap-around pair 1, n) satisfy the braid relation aba = bab; all other
// pairs commute.  Degenerate ranks: at n = 3 every pair is adjacent; at
// n = 2 the two generators satisfy no relation at all (infinite bond).
//
// Failures are data, not errors: the report lists every violated pair with
// both evaluated sides as witnesses.
//
#include "artin/affine.hpp"
#include "artin/word.hpp"

#include <vector>

namespace artin {

template <class S>
struct RelationViolation {
    int i, j;    // 1-based generator indices, i < j
    bool braid;  // true: aba = bab failed; false: ab = ba failed
    AffineElem<S> lhs, rhs;
};

template <class S>
struct RelationReport {
    std::vector<RelationViolation<S>> violations;
    bool ok() const { return violations.empty(); }
};

/// True when generators i and j (1-based) are joined by a braid edge in the
/// rank-n cycle graph.
inline bool cycle_graph_adjacent(int i, int j, int n) {
    if (n == 3) return true;
    if (i > j) std::swap(i, j);
    return j == i + 1 || (i == 1 && j == n);
}

template <class S>
RelationReport<S> check_coxeter_relations(const GenImages<S>& images) {
    RelationReport<S> rep;
    const int n = static_cast<int>(images.size());
    if (n == 2) return rep;  // infinite bond: nothing to check
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const auto &a = images[i - 1], &b = images[j - 1];
            if (cycle_graph_adjacent(i, j, n)) {
                AffineElem<S> lhs = a * b * a;
                AffineElem<S> rhs = b * a * b;
                if (!(lhs == rhs)) rep.violations.push_back({i, j, true, lhs, rhs});
            } else {
                AffineElem<S> lhs = a * b;
                AffineElem<S> rhs = b * a;
                if (!(lhs == rhs)) rep.violations.push_back({i, j, false, lhs, rhs});
            }
        }
    }
    return rep;
}

}  // namespace artin
