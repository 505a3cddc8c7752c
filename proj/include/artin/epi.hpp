#pragma once
//
// The epimorphism decision: a morphism hits all of the Coxeter group exactly
// when (a) its permutation parts generate S_n and (b) the translation images
// of kernel-of-projection generators span the full sum-zero lattice.
// The oracle decides (b) by Smith normal form; predicted_is_epi evaluates
// the per-family closed-form conditions instead, so the two can be compared
// over parameter grids.
//
#include "artin/families.hpp"
#include "artin/lattice.hpp"

namespace artin {

struct EpiVerdict {
    bool is_epi = false;
    bool sn_surjective = false;
    bool lattice_full = false;
    /// The n-1 invariant factors of the kernel lattice (zeros pad rank loss).
    std::vector<Int> invariant_factors;
};

/// Exact decision via subgroup closure + kernel-lattice Smith normal form.
/// Kernel generators: Reidemeister-Schreier set for n <= 6, the g_k and
/// pure-braid families for n in {7, 8} (where only the standard projection
/// occurs, making those words kernel words).
EpiVerdict is_epimorphism(const MorphismSpec& spec);

/// Which third gcd argument the four-parameter transposition family's
/// condition uses: the stated "p + 2 x_2" or the variant reading
/// "x_1 + x_2 + x_3 + 2 x_4".
enum class L5Third { PShifted, SumForm };

/// The transcribed closed-form epimorphism condition for the family
/// (always false for the rank-6 involution family).
bool predicted_is_epi(const MorphismSpec& spec,
                      L5Third l5_variant = L5Third::PShifted);

}  // namespace artin
