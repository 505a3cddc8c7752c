#pragma once
//
// The automorphism calculus of W(A~_{n-1}).  Every automorphism is inner-by-
// graph; the graph part is the dihedral group of the n-cycle generated by the
// rotation rho (s_i -> s_{i+1}, s_n -> s_1) and the symmetry gamma (s_1 ->
// s_1, s_i -> s_{n+2-i}).
//
// rho and gamma are implemented three ways, kept equal by tests:
//   * a direct affine realization (conjugation by the coordinate n-cycle /
//     by the graph reflection, with the affine correction terms),
//   * the w-basis path: decompose an element into translation exponents over
//     w_1..w_{n-1} plus a reduced permutation word, map both through the
//     closed forms, reassemble,
//   * the letter path: rewrite the element as a word in s_1..s_n and map
//     letters through the graph symmetry.
//
#include "artin/affine.hpp"
#include "artin/families.hpp"
#include "artin/word.hpp"

#include <string>
#include <vector>

namespace artin {

/// Element rho^rot or rho^rot followed by gamma of the dihedral graph group.
struct GraphAuto {
    int rot = 0;
    bool flip = false;
};

/// Table-row order used by the distinctness tables:
/// id, gamma, rho, rho gamma, rho^2, rho^2 gamma, ...
std::vector<GraphAuto> all_graph_autos(int n);

std::string graph_auto_name(const GraphAuto& a);          // "r2g", "id", ...
GraphAuto graph_auto_from_name(const std::string& s, int n);

namespace detail {
/// The coordinate n-cycle used by the rotation: 1 -> 2 -> ... -> n -> 1.
inline Perm rho_cycle(int n) {
    std::vector<int> c(n);
    for (int i = 0; i < n; ++i) c[i] = i + 1;
    return Perm::cycle(n, c);
}

/// The coordinate reflection used by the symmetry:
/// 1 <-> 2, i -> n+3-i for 3 <= i <= n-1, n -> 3.
inline Perm gamma_hat(int n) {
    std::vector<int> img(n);
    img[0] = 1;
    img[1] = 0;
    for (int i = 3; i <= n - 1; ++i) img[i - 1] = n + 3 - i - 1;
    img[n - 1] = 2;
    return Perm(std::move(img));
}
}  // namespace detail

/// Direct realization of the rotation: conjugate coordinates by the n-cycle
/// and add the affine correction  e_1 - e_{q(1)}  to the translation.
template <class S>
AffineElem<S> apply_rho(const AffineElem<S>& e) {
    const int n = e.n();
    Perm c = detail::rho_cycle(n);
    Perm q = c * e.p * c.inverse();
    std::vector<S> t = c.act(e.t);
    t[0] = t[0] + S(1);
    t[q(0)] = t[q(0)] - S(1);
    return AffineElem<S>(std::move(t), std::move(q));
}

/// Direct realization of the symmetry: conjugate coordinates by the
/// reflection, negate, and add the correction  u - q.u  with u = e_1 + e_2.
template <class S>
AffineElem<S> apply_gamma(const AffineElem<S>& e) {
    const int n = e.n();
    Perm g = detail::gamma_hat(n);
    Perm q = g * e.p * g.inverse();
    std::vector<S> t = g.act(e.t);
    for (S& x : t) x = -x;
    std::vector<S> u(n, S(0));
    u[0] = S(1);
    u[1] = S(1);
    std::vector<S> qu = q.act(u);
    for (int i = 0; i < n; ++i) t[i] = t[i] + u[i] - qu[i];
    return AffineElem<S>(std::move(t), std::move(q));
}

/// Translation exponents over the w-basis plus a reduced permutation word.
template <class S>
struct WDecomposition {
    std::vector<S> exponents;  // n-1 entries, exponent of w_i at index i-1
    Word perm_word;            // letters over s_1..s_{n-1}
};

/// exponents_i = t_i for i <= n-1; perm_word = reduced word of the
/// permutation part.  Reassembly  prod w_i^{e_i} * (perm word)  is exact.
template <class S>
WDecomposition<S> decompose(const AffineElem<S>& e) {
    WDecomposition<S> d;
    d.exponents.assign(e.t.begin(), e.t.end() - 1);
    d.perm_word = perm_to_simple_word(e.p);
    return d;
}

/// Pure translation prod_i w_i^{exps[i-1]}.
template <class S>
AffineElem<S> assemble_translation(int n, const std::vector<S>& exps) {
    std::vector<S> t(n, S(0));
    S sum(0);
    for (int i = 0; i < n - 1; ++i) {
        t[i] = exps[i];
        sum += exps[i];
    }
    t[n - 1] = -sum;
    return AffineElem<S>(std::move(t), Perm(n));
}

template <class S>
AffineElem<S> eval_s_word(int n, const Word& w) {
    AffineElem<S> acc = AffineElem<S>::identity(n);
    for (const Letter& l : w) {
        AffineElem<S> g = s_gen<S>(n, l.index);
        acc = acc * (l.sign > 0 ? g : g.inverse());
    }
    return acc;
}

/// Rotation letter map s_j -> s_{j+1}, s_n -> s_1.
inline int rho_letter(int j, int n) { return j % n + 1; }
/// Symmetry letter map s_1 -> s_1, s_j -> s_{n+2-j}.
inline int gamma_letter(int j, int n) { return j == 1 ? 1 : n + 2 - j; }

/// w-basis path for the rotation: rho(w_i) = w_{i+1} w_1^{-1} (i <= n-2),
/// rho(w_{n-1}) = w_1^{-1}; letters shift by one.
template <class S>
AffineElem<S> apply_rho_wbasis(const AffineElem<S>& e) {
    const int n = e.n();
    WDecomposition<S> d = decompose(e);
    std::vector<S> out(n - 1, S(0));
    for (int i = 1; i <= n - 1; ++i) {
        const S& t = d.exponents[i - 1];
        if (i <= n - 2) out[i] += t;  // w_{i+1}
        out[0] -= t;                  // w_1^{-1}
    }
    Word mapped;
    for (const Letter& l : d.perm_word)
        mapped.push_back(Letter{rho_letter(l.index, n), l.sign});
    return assemble_translation(n, out) * eval_s_word<S>(n, mapped);
}

/// w-basis path for the symmetry: gamma(w_1) = w_2^{-1} w_3, gamma(w_2) =
/// w_3 w_1^{-1}, gamma(w_3) = w_3, gamma(w_i) = w_3 w_{n+3-i}^{-1} for
/// 4 <= i <= n-1; at n = 3 the small cases gamma(w_1) = w_2^{-1},
/// gamma(w_2) = w_1^{-1}; letters reflect around 1.
template <class S>
AffineElem<S> apply_gamma_wbasis(const AffineElem<S>& e) {
    const int n = e.n();
    WDecomposition<S> d = decompose(e);
    std::vector<S> out(n - 1, S(0));
    if (n == 3) {
        out[1] -= d.exponents[0];
        out[0] -= d.exponents[1];
    } else {
        out[1] -= d.exponents[0];
        out[2] += d.exponents[0];
        out[2] += d.exponents[1];
        out[0] -= d.exponents[1];
        out[2] += d.exponents[2];
        for (int i = 4; i <= n - 1; ++i) {
            out[2] += d.exponents[i - 1];
            out[n + 3 - i - 1] -= d.exponents[i - 1];
        }
    }
    Word mapped;
    for (const Letter& l : d.perm_word)
        mapped.push_back(Letter{gamma_letter(l.index, n), l.sign});
    return assemble_translation(n, out) * eval_s_word<S>(n, mapped);
}

/// Word in s_1..s_n for w_1 = s_n s_1 ... s_{n-2} s_{n-1} s_{n-2} ... s_1
/// and w_k = s_{k-1} ... s_1 w_1 s_1 ... s_{k-1}.
Word w_basis_word(int n, int k);

/// Rewrite an element as a word in s_1..s_n (w-basis words for the
/// translation exponents followed by the reduced permutation word).
/// Only available for integer scalars (exponents become repeat counts).
Word to_s_word(const AffineElem<Int>& e);

/// Letter path: full s-word, letters mapped, re-evaluated.
AffInt apply_rho_sword(const AffInt& e);
AffInt apply_gamma_sword(const AffInt& e);

/// rho^rot first, then gamma if flip is set (the order that reproduces the
/// transcribed symbolic table bit-exactly).
template <class S>
AffineElem<S> apply_graph_auto(const GraphAuto& a, AffineElem<S> e) {
    for (int i = 0; i < a.rot; ++i) e = apply_rho(e);
    if (a.flip) e = apply_gamma(e);
    return e;
}

template <class S>
GenImages<S> apply_auto(const GraphAuto& a, const GenImages<S>& images) {
    GenImages<S> out;
    out.reserve(images.size());
    for (const auto& e : images) out.push_back(apply_graph_auto(a, e));
    return out;
}

template <class S>
GenImages<S> apply_inner(const AffineElem<S>& w, const GenImages<S>& images) {
    GenImages<S> out;
    out.reserve(images.size());
    for (const auto& e : images) out.push_back(conj(w, e));
    return out;
}

/// One verified identity of the propagation propositions; where the printed
/// form disagrees with the machine-checked one, corrected_ok reports the
/// corrected variant (documented in the implementation).
struct PropagationCheck {
    std::string clause;
    bool printed_ok = false;
    bool corrected_ok = false;
    std::string witness;  // non-empty when something failed
};

struct PropagationReport {
    std::vector<PropagationCheck> checks;
    bool all_printed_ok() const;
    bool all_corrected_ok() const;
};

/// Evaluates both sides of every identity of the rotation/symmetry
/// propagation propositions for the normalized family at (y, p).
PropagationReport verify_propagation(int n, const Int& y, const Int& p);

/// The full (auto x generator) table of one representative.
struct AutoTable {
    std::vector<GraphAuto> autos;
    std::vector<GenImagesInt> lines;  // lines[a] = apply_auto(autos[a], rep)
};

AutoTable orbit_table(const GenImagesInt& rep, const std::vector<GraphAuto>& autos);

/// Groups representative indices whose tables share a full line; the
/// partition is discrete exactly when no line repeats across (or within)
/// representatives.
struct DistinctnessResult {
    std::vector<std::vector<int>> groups;   // partition of rep indices
    std::vector<AutoTable> tables;
    bool all_distinct() const;
};

DistinctnessResult distinct_classes(const std::vector<GenImagesInt>& reps,
                                    const std::vector<GraphAuto>& autos);

}  // namespace artin
