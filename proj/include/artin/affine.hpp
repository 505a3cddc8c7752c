#pragma once
//
// The affine symmetric group realized as  Z_0^n  ⋊  S_n,  where Z_0^n is the
// sum-zero sublattice of Z^n and S_n permutes coordinates.  Elements are
// written [t]p with translation part t and permutation part p; the group law
// is
//
//     [u]s * [v]t = [u + s.v](s*t),     (s.v)[s(i)] = v[i],
//
// so the right factor's translation is first pushed through the left
// factor's permutation.  Inverse: [t]p^{-1} = [-(p^{-1}.t)]p^{-1}.
//
// The translation scalar is a template parameter: exact integers for
// numeric work, integer-coefficient linear forms for symbolic work in the
// family parameters.  Only addition, negation and coordinate permutation
// of scalars are ever required.
//
#include "artin/ints.hpp"
#include "artin/perm.hpp"

#include <stdexcept>
#include <vector>

namespace artin {

template <class S>
struct AffineElem {
    std::vector<S> t;  // translation part, coordinates sum to zero
    Perm p;            // permutation part

    AffineElem() = default;
    AffineElem(std::vector<S> trans, Perm perm) : t(std::move(trans)), p(std::move(perm)) {
        if (static_cast<int>(t.size()) != p.n())
            throw std::invalid_argument("affine element size mismatch");
    }

    static AffineElem identity(int n) {
        return AffineElem(std::vector<S>(n, S(0)), Perm::identity(n));
    }

    int n() const { return p.n(); }

    bool is_identity() const {
        if (!p.is_identity()) return false;
        for (const S& x : t)
            if (!(x == S(0))) return false;
        return true;
    }

    friend AffineElem operator*(const AffineElem& a, const AffineElem& b) {
        std::vector<S> moved = a.p.act(b.t);
        std::vector<S> sum(a.t.size());
        for (std::size_t i = 0; i < sum.size(); ++i) sum[i] = a.t[i] + moved[i];
        return AffineElem(std::move(sum), a.p * b.p);
    }

    AffineElem inverse() const {
        Perm ip = p.inverse();
        std::vector<S> moved = ip.act(t);
        for (S& x : moved) x = -x;
        return AffineElem(std::move(moved), std::move(ip));
    }

    friend bool operator==(const AffineElem& a, const AffineElem& b) {
        if (a.p != b.p || a.t.size() != b.t.size()) return false;
        for (std::size_t i = 0; i < a.t.size(); ++i)
            if (!(a.t[i] == b.t[i])) return false;
        return true;
    }
    friend bool operator!=(const AffineElem& a, const AffineElem& b) { return !(a == b); }

    /// Lexicographic order (translation first, then permutation); only needed
    /// so that elements and image tuples can key ordered containers.
    friend bool operator<(const AffineElem& a, const AffineElem& b) {
        if (a.t != b.t) return a.t < b.t;
        return a.p < b.p;
    }
};

using AffInt = AffineElem<Int>;
using AffForm = AffineElem<LinForm>;

/// Exact integer power (negative exponents use the inverse).
template <class S>
AffineElem<S> power(const AffineElem<S>& e, long long k) {
    AffineElem<S> base = k < 0 ? e.inverse() : e;
    if (k < 0) k = -k;
    AffineElem<S> acc = AffineElem<S>::identity(e.n());
    while (k > 0) {
        if (k & 1) acc = acc * base;
        base = base * base;
        k >>= 1;
    }
    return acc;
}

/// Conjugation g * e * g^{-1}.
template <class S>
AffineElem<S> conj(const AffineElem<S>& g, const AffineElem<S>& e) {
    return g * e * g.inverse();
}

/// Coxeter generator s_i of W(A~_{n-1}):
///   s_i = [0](i, i+1) for 1 <= i <= n-1,
///   s_n = [1, 0, ..., 0, -1](1, n)   (the affine node).
template <class S>
AffineElem<S> s_gen(int n, int i) {
    if (i < 1 || i > n) throw std::out_of_range("generator index");
    std::vector<S> t(n, S(0));
    if (i < n) return AffineElem<S>(std::move(t), Perm::cycle(n, {i, i + 1}));
    t[0] = S(1);
    t[n - 1] = S(-1);
    return AffineElem<S>(std::move(t), Perm::cycle(n, {1, n}));
}

/// Pure translation w_{i,t} = [0,..,0,t,0,..,0,-t] (t at coordinate i, -t at
/// coordinate n) with identity permutation; w_i = w_{i,1}.
template <class S>
AffineElem<S> trans_w(int n, int i, const S& val) {
    if (i < 1 || i > n - 1) throw std::out_of_range("translation index");
    std::vector<S> t(n, S(0));
    t[i - 1] = val;
    t[n - 1] = -val;
    return AffineElem<S>(std::move(t), Perm::identity(n));
}

inline AffInt s_gen_int(int n, int i) { return s_gen<Int>(n, i); }

/// Sum of translation coordinates (0 for every group element).
template <class S>
S coord_sum(const AffineElem<S>& e) {
    S acc(0);
    for (const S& x : e.t) acc += x;
    return acc;
}

}  // namespace artin
