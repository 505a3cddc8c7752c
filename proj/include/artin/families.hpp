#pragma once
//
// The morphism families from the affine Artin group A(A~_{n-1}) to its
// Coxeter group W(A~_{n-1}), given by explicit generator images:
//
//   L1  : the n+1 parameter family over sigma_i -> (adjacent transposition)
//         and sigma_n -> (1,n); parameters x_1..x_n, y (y last).
//   YP  : the two-parameter normalized subfamily (y, p) of L1.
//   MU  : the standard morphism sigma_i -> s_i (equals YP(0,1)).
//   L2  : the five-parameter rank-6 family over the exceptional S_6 tuple.
//   L3, L4, L6, L7 : three-parameter rank-4 families over 4-cycle tuples.
//   L5  : the four-parameter rank-4 family over an involution tuple.
//
// Permutation parts are transcribed as printed cycle lists; printed cycles
// multiply left-to-right and the resulting permutation is then INVERTED
// (the one reading under which every family satisfies the defining
// relations; pinned by a dedicated test).
//
// All translation coordinates are linear in the parameters, so the builder
// is generic over the scalar: exact integers for numeric parameters,
// linear forms for symbolic ones.
//
#include "artin/affine.hpp"
#include "artin/linform.hpp"
#include "artin/word.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace artin {

enum class FamilyId { L1, L2, L3, L4, L5, L6, L7, YP, MU };

std::string family_name(FamilyId f);
FamilyId family_from_name(const std::string& s);

/// Fixed rank of a family, or 0 when the rank is a free choice (L1/YP/MU).
int family_fixed_rank(FamilyId f);

/// Number of parameters: L1 -> n+1 (x_1..x_n, y last); YP -> 2 (y, p);
/// L2 -> 5; L3/L4/L6/L7 -> 3; L5 -> 4; MU -> 0.
int family_arity(FamilyId f, int n);

struct MorphismSpec {
    FamilyId family;
    int n;
    std::vector<Int> params;
};

/// Validate rank and parameter count; throws std::invalid_argument.
void validate_spec(const MorphismSpec& spec);

namespace detail {

template <class S>
Perm printed_perm(int n, const std::vector<std::vector<int>>& cycles) {
    return Perm::from_cycles(n, cycles).inverse();
}

/// L1 images from generic scalars xs[0..n-1] and y.
template <class S>
GenImages<S> build_l1(int n, const std::vector<S>& xs, const S& y) {
    GenImages<S> ims;
    for (int i = 1; i <= n - 1; ++i) {
        std::vector<S> t(n, y);
        t[i - 1] = -(Int(n - 2) * y) - xs[i - 1];
        t[i] = xs[i - 1];
        ims.emplace_back(std::move(t), Perm::cycle(n, {i, i + 1}).inverse());
    }
    std::vector<S> t(n, y);
    t[0] = xs[n - 1];
    t[n - 1] = -(Int(n - 2) * y) - xs[n - 1];
    ims.emplace_back(std::move(t), Perm::cycle(n, {1, n}).inverse());
    return ims;
}

template <class S>
GenImages<S> build_family(FamilyId f, int n, const std::vector<S>& x);

}  // namespace detail

/// Generator images with exact integer parameters.
GenImagesInt build_images(const MorphismSpec& spec);

/// Generator images with the parameters left symbolic: parameter j becomes
/// the linear-form variable x<j+1>.
GenImagesForm build_images_symbolic(FamilyId f, int n);

/// Dimension of the affine solution space for translation parts: given the
/// fixed permutation parts, impose every defining relation of the rank-n
/// Artin group plus the sum-zero constraint on n unknown rational vectors
/// and return the dimension of the solution space.
struct TranslationSpace {
    int dimension;
    bool consistent;  // false only signals an internal contradiction
};
TranslationSpace solve_translation_space(int n, const std::vector<Perm>& perm_parts);

/// Normalization of an L1 morphism to the two-parameter (y, p) subfamily.
///
/// The conjugator is a pure translation of the EXTENDED lattice (its
/// coordinates need not sum to zero; conjugation by any integer translation
/// preserves the sum-zero group), with v_1 = 0 and v_k = -(x_1+...+x_{k-1}).
/// The conjugated images coincide exactly with build_images(YP, n, (y, p))
/// where p = x_n + x_1 + ... + x_{n-1}.
struct YpNormalization {
    Int y;
    Int p;
    AffInt conjugator;        // [v] with identity permutation
    GenImagesInt conjugated;  // equals build_images(YP, n, (y, p))
};
YpNormalization normalize_to_yp(const MorphismSpec& spec);

}  // namespace artin
