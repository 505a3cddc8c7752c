#pragma once
//
// Kernel-generator machinery for the epimorphism decision.
//
// For a morphism xi with permutation projection pr (sigma_i -> permutation
// part), the kernel of pr∘xi is a finite-index subgroup of the Artin group;
// its image under xi is a set of pure translations whose span decides
// whether xi hits the whole translation lattice.
//
// Two kinds of generating sets are provided:
//
//   * the printed word families (GK / PURE / WRAPPED and their union ALL),
//     which are kernel words exactly when they evaluate with identity
//     permutation part — this holds for the families whose projection is
//     the standard one, and (empirically, covered by tests) for the rank-6
//     involution family; requesting them elsewhere is an error;
//
//   * the Reidemeister-Schreier set (SCHREIER), valid for every morphism:
//     a breadth-first coset tree over the finite image subgroup H of S_n,
//     with one generator  r_v · sigma_i · r_{v·p_i}^{-1}  per (coset, letter)
//     pair.  These words generate the kernel of pr∘xi exactly, so the span
//     of their translation images is the kernel lattice itself.
//
#include "artin/families.hpp"
#include "artin/lattice.hpp"
#include "artin/word.hpp"

#include <vector>

namespace artin {

enum class KernelSet { GK, PURE, WRAPPED, ALL, SCHREIER };

KernelSet kernel_set_from_name(const std::string& s);
std::string kernel_set_name(KernelSet s);

/// The printed word families; ALL is their union, except that the wrapped
/// family (n! words) is omitted for n >= 7.
std::vector<Word> kernel_words_printed(KernelSet set, int n);

/// Reidemeister-Schreier kernel generators for the given generator images'
/// permutation parts (valid for any morphism; n <= 6 guard keeps the list
/// at most 6! * 6 words).
std::vector<Word> schreier_words(const std::vector<Perm>& perm_parts);

/// Evaluate a word set under generator images and collect translation rows;
/// throws std::runtime_error if any word evaluates with a non-identity
/// permutation part.
template <class S>
std::vector<std::vector<S>> kernel_rows(const GenImages<S>& images,
                                        const std::vector<Word>& words) {
    std::vector<std::vector<S>> rows;
    rows.reserve(words.size());
    for (const Word& w : words) {
        AffineElem<S> e = eval_word(images, w);
        if (!e.p.is_identity())
            throw std::runtime_error(
                "kernel generator evaluated with non-identity permutation part");
        rows.push_back(std::move(e.t));
    }
    return rows;
}

/// Kernel matrix of a morphism under the requested generator set.
GenMatrix kernel_matrix(const MorphismSpec& spec, KernelSet set);

}  // namespace artin
