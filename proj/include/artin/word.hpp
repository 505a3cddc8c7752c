#pragma once
//
// Words in the Artin generators sigma_1..sigma_n and their evaluation under
// a morphism given by generator images.  A letter is a pair (index, sign),
// 1-based index, sign +1/-1; a word is the left-to-right product of its
// letters.
//
// Also provides the specific kernel-generator words used by the
// epimorphism decision:
//   * g_k        for 1 <= k <= 2n-1  (g_n = sigma_n^2, g_{n+i} = sigma_i^2),
//   * a_ij       pure-braid generators,
//   * wrapped words  simple(s) * sigma_n * simple(s*(1,n))^{-1}, one per
//     permutation s, which exhaust the conjugates of the affine generator.
//
#include "artin/affine.hpp"
#include "artin/perm.hpp"

#include <stdexcept>
#include <utility>
#include <vector>

namespace artin {

struct Letter {
    int index;  // 1-based generator index
    int sign;   // +1 or -1
    friend bool operator==(const Letter& a, const Letter& b) {
        return a.index == b.index && a.sign == b.sign;
    }
};

using Word = std::vector<Letter>;

inline Word word_inverse(const Word& w) {
    Word r;
    r.reserve(w.size());
    for (auto it = w.rbegin(); it != w.rend(); ++it) r.push_back({it->index, -it->sign});
    return r;
}

inline Word word_concat(Word a, const Word& b) {
    a.insert(a.end(), b.begin(), b.end());
    return a;
}

/// Generator images of a morphism from the rank-n Artin group:
/// images[i-1] is the image of sigma_i.
template <class S>
using GenImages = std::vector<AffineElem<S>>;

using GenImagesInt = GenImages<Int>;
using GenImagesForm = GenImages<LinForm>;

/// Left-to-right product of images/inverses along the word.
template <class S>
AffineElem<S> eval_word(const GenImages<S>& images, const Word& w) {
    if (images.empty()) throw std::invalid_argument("eval_word: no images");
    AffineElem<S> e = AffineElem<S>::identity(images[0].n());
    for (const Letter& l : w) {
        if (l.index < 1 || l.index > static_cast<int>(images.size()))
            throw std::out_of_range("eval_word: letter index");
        e = e * (l.sign > 0 ? images[l.index - 1] : images[l.index - 1].inverse());
    }
    return e;
}

/// The permutation image of a word under the standard projection
/// sigma_i -> (i, i+1), sigma_n -> (1, n).
Perm word_perm_standard(const Word& w, int n);

/// Kernel-generator family g_k, 1 <= k <= 2n-1:
///   g_k     = sigma_{k-1}..sigma_1 sigma_{k+1}..sigma_n
///             (sigma_k..sigma_1 sigma_{k+1}..sigma_{n-1})^{-1}   (k < n),
///   g_n     = sigma_n^2,
///   g_{n+i} = sigma_i^2                                           (1 <= i <= n-1).
Word gk_word(int k, int n);

/// Pure-braid generator a_ij = sigma_{j-1}..sigma_{i+1} sigma_i^2
/// sigma_{i+1}^{-1}..sigma_{j-1}^{-1}, for 1 <= i < j <= n-1.
Word pure_braid_word(int i, int j, int n);

/// Deterministic positive reduced word for a permutation in
/// sigma_1..sigma_{n-1}: repeatedly swap the leftmost descent (bubble
/// sort, smallest index first).  Length equals the inversion count.
Word perm_to_simple_word(const Perm& p);

/// One wrapped word per permutation s of {1..n}:
///     simple(s) * sigma_n * simple(s*(1,n))^{-1}.
/// Under the standard projection each evaluates into the kernel.
/// Restricted to n <= 6 (the list has n! entries).
std::vector<Word> sigma_n_wrapped_words(int n);

}  // namespace artin
