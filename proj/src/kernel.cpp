#include "artin/kernel.hpp"

#include <map>
#include <stdexcept>

namespace artin {

KernelSet kernel_set_from_name(const std::string& s) {
    if (s == "gk") return KernelSet::GK;
    if (s == "pure") return KernelSet::PURE;
    if (s == "wrapped") return KernelSet::WRAPPED;
    if (s == "all") return KernelSet::ALL;
    if (s == "schreier") return KernelSet::SCHREIER;
    throw std::runtime_error("unknown kernel set name: " + s);
}

std::string kernel_set_name(KernelSet s) {
    switch (s) {
        case KernelSet::GK: return "gk";
        case KernelSet::PURE: return "pure";
        case KernelSet::WRAPPED: return "wrapped";
        case KernelSet::ALL: return "all";
        case KernelSet::SCHREIER: return "schreier";
    }
    throw std::runtime_error("bad kernel set");
}

std::vector<Word> kernel_words_printed(KernelSet set, int n) {
    std::vector<Word> out;
    auto add_gk = [&] {
        for (int k = 1; k <= 2 * n - 1; ++k) out.push_back(gk_word(k, n));
    };
    auto add_pure = [&] {
        for (int i = 1; i < n - 1; ++i)
            for (int j = i + 1; j <= n - 1; ++j)
                out.push_back(pure_braid_word(i, j, n));
    };
    auto add_wrapped = [&] {
        auto ws = sigma_n_wrapped_words(n);
        out.insert(out.end(), ws.begin(), ws.end());
    };
    switch (set) {
        case KernelSet::GK: add_gk(); break;
        case KernelSet::PURE: add_pure(); break;
        case KernelSet::WRAPPED: add_wrapped(); break;
        case KernelSet::ALL:
            add_gk();
            add_pure();
            if (n <= 6) add_wrapped();
            break;
        case KernelSet::SCHREIER:
            throw std::runtime_error(
                "schreier words depend on the morphism; use schreier_words()");
    }
    return out;
}

std::vector<Word> schreier_words(const std::vector<Perm>& perm_parts) {
    if (perm_parts.empty()) throw std::runtime_error("no generators");
    const int n = perm_parts[0].size();
    const int m = static_cast<int>(perm_parts.size());

    // Breadth-first coset (here: element) tree of the image subgroup H,
    // with a representative word for every element.
    std::map<Perm, Word> rep;
    std::vector<Perm> order;
    Perm id(n);
    rep[id] = Word{};
    order.push_back(id);
    for (std::size_t head = 0; head < order.size(); ++head) {
        Perm v = order[head];
        for (int i = 1; i <= m; ++i) {
            Perm child = v * perm_parts[i - 1];
            if (rep.find(child) == rep.end()) {
                Word w = rep[v];
                w.push_back(Letter{i, +1});
                rep[child] = std::move(w);
                order.push_back(child);
            }
        }
    }

    // One kernel generator per (element, letter) pair:
    //   r_v · sigma_i · r_{v * p_i}^{-1}.
    std::vector<Word> out;
    out.reserve(order.size() * m);
    for (const Perm& v : order) {
        for (int i = 1; i <= m; ++i) {
            Perm child = v * perm_parts[i - 1];
            Word w = rep[v];
            w.push_back(Letter{i, +1});
            Word back = word_inverse(rep[child]);
            w.insert(w.end(), back.begin(), back.end());
            out.push_back(std::move(w));
        }
    }
    return out;
}

GenMatrix kernel_matrix(const MorphismSpec& spec, KernelSet set) {
    GenImages<Int> images = build_images(spec);
    std::vector<Word> words;
    if (set == KernelSet::SCHREIER) {
        if (spec.n > 6)
            throw std::runtime_error("schreier kernel set is limited to n <= 6");
        std::vector<Perm> perms;
        perms.reserve(images.size());
        for (const auto& e : images) perms.push_back(e.p);
        words = schreier_words(perms);
    } else {
        words = kernel_words_printed(set, spec.n);
    }
    GenMatrix mat;
    mat.n = spec.n;
    mat.rows = kernel_rows(images, words);
    return mat;
}

}  // namespace artin
