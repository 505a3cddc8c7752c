#include "artin/word.hpp"

#include <algorithm>
#include <numeric>

namespace artin {

Perm word_perm_standard(const Word& w, int n) {
    Perm p = Perm::identity(n);
    for (const Letter& l : w) {
        Perm q = l.index < n ? Perm::cycle(n, {l.index, l.index + 1}) : Perm::cycle(n, {1, n});
        if (l.sign < 0) q = q.inverse();
        p = p * q;
    }
    return p;
}

Word gk_word(int k, int n) {
    if (k < 1 || k > 2 * n - 1) throw std::out_of_range("gk_word index");
    if (k == n) return {{n, 1}, {n, 1}};
    if (k > n) {
        int i = k - n;
        return {{i, 1}, {i, 1}};
    }
    Word head;
    for (int t = k - 1; t >= 1; --t) head.push_back({t, 1});
    for (int t = k + 1; t <= n; ++t) head.push_back({t, 1});
    Word tail;
    for (int t = k; t >= 1; --t) tail.push_back({t, 1});
    for (int t = k + 1; t <= n - 1; ++t) tail.push_back({t, 1});
    return word_concat(std::move(head), word_inverse(tail));
}

Word pure_braid_word(int i, int j, int n) {
    if (!(1 <= i && i < j && j <= n - 1)) throw std::out_of_range("pure_braid_word indices");
    Word pre;
    for (int t = j - 1; t >= i + 1; --t) pre.push_back({t, 1});
    Word w = pre;
    w.push_back({i, 1});
    w.push_back({i, 1});
    return word_concat(std::move(w), word_inverse(pre));
}

Word perm_to_simple_word(const Perm& p) {
    std::vector<int> img = p.images();
    const int n = p.n();
    Word letters;  // collected so that p * s_{i1} * s_{i2} * ... = id
    for (;;) {
        int d = -1;
        for (int i = 0; i + 1 < n; ++i) {
            if (img[i] > img[i + 1]) {
                d = i;
                break;
            }
        }
        if (d < 0) break;
        std::swap(img[d], img[d + 1]);  // right-multiply by s_{d+1}
        letters.push_back({d + 1, 1});
    }
    // p = s_{ik} * ... * s_{i1}
    std::reverse(letters.begin(), letters.end());
    return letters;
}

std::vector<Word> sigma_n_wrapped_words(int n) {
    if (n > 6) throw std::invalid_argument("wrapped word list grows as n!; supported for n <= 6");
    std::vector<int> base(n);
    std::iota(base.begin(), base.end(), 0);
    Perm t1n = Perm::cycle(n, {1, n});
    std::vector<Word> out;
    std::vector<int> img = base;
    do {
        Perm s{std::vector<int>(img)};
        Word w = perm_to_simple_word(s);
        w.push_back({n, 1});
        out.push_back(word_concat(std::move(w), word_inverse(perm_to_simple_word(s * t1n))));
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace artin
