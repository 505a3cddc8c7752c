#pragma once
//
// Exact arithmetic in the infinite dihedral group D_inf = Z x| {+-1} =
// <s_1, s_2 | s_1^2 = s_2^2 = 1>, surjectivity decisions for morphisms from
// the rank-2 free group, and a bounded classification of those epimorphisms
// up to automorphism (every automorphism is inner-by-swap).
//
#include "artin/ints.hpp"

#include <string>
#include <utility>
#include <vector>

namespace artin {

/// (offset, reflect) with s_1 = (0, true), s_2 = (1, true); translations are
/// (k, false).  Reflect acts on offsets as -1.
struct DihedralElem {
    Int offset = 0;
    bool reflect = false;

    friend bool operator==(const DihedralElem& a, const DihedralElem& b) {
        return a.offset == b.offset && a.reflect == b.reflect;
    }
    friend bool operator!=(const DihedralElem& a, const DihedralElem& b) {
        return !(a == b);
    }
    friend bool operator<(const DihedralElem& a, const DihedralElem& b) {
        if (a.reflect != b.reflect) return a.reflect < b.reflect;
        return a.offset < b.offset;
    }
};

inline DihedralElem d_identity() { return DihedralElem{0, false}; }
inline DihedralElem d_s1() { return DihedralElem{0, true}; }
inline DihedralElem d_s2() { return DihedralElem{1, true}; }

/// (k, e)(m, d) = (k + e.m, e.d).
DihedralElem d_mul(const DihedralElem& a, const DihedralElem& b);
DihedralElem d_inverse(const DihedralElem& a);

/// Alternating product: (ab)^{q/2} for even q, (ab)^{(q-1)/2} a for odd q.
DihedralElem prod_q(const DihedralElem& a, const DihedralElem& b, int q);

/// Length of the reduced alternating word: 2|k| for a translation,
/// 2*max(k, 1-k) - 1 for a reflection (validated against a literal oracle).
Int word_length(const DihedralElem& e);

/// Evaluate a word over letters 1 (s_1) and 2 (s_2).
DihedralElem d_eval_letters(const std::vector<int>& letters);

/// The reduced letter word of an element (empty for the identity).
std::vector<int> d_letters(const DihedralElem& e);

std::string d_str(const DihedralElem& e);

/// Images of the two free generators.
struct A1Morphism {
    DihedralElem img1;
    DihedralElem img2;

    friend bool operator==(const A1Morphism& a, const A1Morphism& b) {
        return a.img1 == b.img1 && a.img2 == b.img2;
    }
    friend bool operator<(const A1Morphism& a, const A1Morphism& b) {
        if (!(a.img1 == b.img1)) return a.img1 < b.img1;
        return a.img2 < b.img2;
    }
};

/// Generator swap s_1 <-> s_2; with conjugation it exhausts the
/// automorphism group.
DihedralElem swap_gens(const DihedralElem& e);

/// True iff the images generate the whole group: some image must reflect,
/// and the translation lattice spanned by translation offsets together with
/// pairwise reflection-offset differences must be all of Z.
bool is_epi_a1(const A1Morphism& m);

/// All group elements of word length <= max_len.
std::vector<DihedralElem> d_ball(int max_len);

/// Whether some automorphism psi = conj(c) o swap^d with word_length(c) <=
/// conj_bound maps a's images onto b's.
bool a1_equivalent(const A1Morphism& a, const A1Morphism& b, int conj_bound);

struct A1Class {
    A1Morphism representative;          // lexicographically least member
    int size = 0;
    bool matches_family1 = false;       // contains some (prod_{q'} pair, |w'| = 2)
    bool matches_family2 = false;       // contains some (s_1 s_2, prod_q pair)
};

struct A1ClassifyReport {
    int max_len = 0;
    int conj_bound = 0;
    int epi_pairs = 0;
    std::vector<A1Class> classes;
    /// Class representatives not reached by either family (the standard
    /// epimorphism mu = (s_1, s_2) lands here: both its image lengths are 1).
    std::vector<A1Morphism> extras;
    /// Family members inside the length bound that failed the surjectivity
    /// test (expected empty).
    std::vector<A1Morphism> missing;
};

/// The first classification family at parameter q' (odd): sigma_1 maps to
/// prod_{q'}(s_1, s_2), sigma_2 to a length-2 element.
std::vector<A1Morphism> family1_pairs(int max_len);
/// The second family: sigma_1 maps to s_1 s_2, sigma_2 to prod_q(s_1, s_2)
/// with q odd.
std::vector<A1Morphism> family2_pairs(int max_len);

/// Enumerates image pairs with word lengths <= max_len (max 11), keeps the
/// surjections, merges pairs equivalent under swap + conjugation by elements
/// of length <= conj_bound (max 8), and compares against the two
/// classification families.  Throws std::invalid_argument beyond the bounds.
A1ClassifyReport classify_bounded(int max_len, int conj_bound);

}  // namespace artin
