#pragma once
//
// Enumeration and classification of homomorphisms from the affine braid
// group on the n-cycle graph to the symmetric group S_n: backtracking search
// over generator images with incremental relation pruning, conjugacy-class
// deduplication, and the encoded exceptional tuples for ranks 4 and 6.
//
#include "artin/perm.hpp"

#include <optional>
#include <vector>

namespace artin {

/// Order of the subgroup of S_n generated by the given permutations
/// (breadth-first closure; intended for n <= 8).
std::size_t subgroup_order(const std::vector<Perm>& gens, int n);

/// A homomorphism to S_n recorded by the images of the n generators.
struct SnHom {
    int n = 0;
    std::vector<Perm> perms;

    bool relations_ok() const;
    bool surjective() const;
    /// Concatenated one-line images; total order for canonical forms.
    std::vector<int> key() const;
};

bool operator==(const SnHom& a, const SnHom& b);
bool operator<(const SnHom& a, const SnHom& b);

/// Simultaneous conjugation g . (t_1,...,t_n) = (g t_1 g^-1, ...).
SnHom conjugate_hom(const SnHom& h, const Perm& g);

/// Key-minimal representative of the conjugation orbit (exhaustive over S_n).
SnHom canonical_rep(const SnHom& h);

bool sn_homs_conjugate(const SnHom& a, const SnHom& b);

/// Precompose with a relabeling of the defining n-cycle graph: rotation
/// sends position i to i+rot (mod n), the optional flip then reverses around
/// position 1.  Used to merge enumeration classes under graph symmetry.
SnHom precompose_graph_auto(const SnHom& h, int rot, bool flip);

/// Key-minimal representative over conjugation combined with all 2n graph
/// relabelings.
SnHom canonical_rep_mod_graph(const SnHom& h);

struct ClassifyResult {
    /// One canonical representative per conjugation orbit, sorted.
    std::vector<SnHom> classes;
    /// The same orbits further merged under graph relabelings.
    std::vector<SnHom> classes_mod_graph;
    bool budget_exhausted = false;
    long long nodes = 0;
};

/// Full backtracking enumeration of surjective relation-satisfying tuples,
/// with the first image fixed to one representative per conjugacy class.
/// budget < 0 means unlimited; otherwise the search stops after that many
/// candidate extensions and flags the (partial) result.
ClassifyResult enumerate_surjective_homs(int n, long long budget = -1);

/// Expansion of the (sigma_1, D) presentation of the exceptional tuples:
/// builds sigma_{i+1} = D sigma_i D^-1 for i = 1..n-2 and appends the given
/// final image.  If the resulting tuple violates the relations, the mirrored
/// reading sigma_{i+1} = D^-1 sigma_i D is tried and recorded.
struct ExpandResult {
    SnHom hom;
    bool used_mirror = false;
    bool relations_ok = false;
    bool surjective = false;
};
ExpandResult expand_from_sigma1_D(int n, const Perm& sigma1, const Perm& D,
                                  const std::optional<Perm>& sigma_n);

/// The standard tuple sigma_i = (i,i+1), sigma_n = (1,n).
SnHom standard_hom(int n);

/// The encoded exceptional-class list: for n = 4 the standard tuple plus the
/// five exceptional ones ((a,b,a,b)/(a,b,a,e)/(a,b,a^-1,b)/(a,b,a^-1,e) in
/// 4-cycles, and the repeated-transposition tuple); for n = 6 the standard
/// tuple plus the triple-transposition tuple; otherwise just the standard
/// tuple.
std::vector<SnHom> encoded_reference_homs(int n);

}  // namespace artin
