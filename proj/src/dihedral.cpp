#include "artin/dihedral.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <set>
#include <sstream>
#include <stdexcept>

namespace artin {

DihedralElem d_mul(const DihedralElem& a, const DihedralElem& b) {
    return DihedralElem{a.offset + (a.reflect ? -b.offset : b.offset),
                        a.reflect != b.reflect};
}

DihedralElem d_inverse(const DihedralElem& a) {
    return a.reflect ? a : DihedralElem{-a.offset, false};
}

DihedralElem prod_q(const DihedralElem& a, const DihedralElem& b, int q) {
    if (q < 0) throw std::invalid_argument("prod_q needs q >= 0");
    DihedralElem ab = d_mul(a, b);
    DihedralElem acc = d_identity();
    for (int i = 0; i < q / 2; ++i) acc = d_mul(acc, ab);
    if (q % 2 == 1) acc = d_mul(acc, a);
    return acc;
}

Int word_length(const DihedralElem& e) {
    if (!e.reflect) return 2 * boost::multiprecision::abs(e.offset);
    Int m = std::max(e.offset, 1 - e.offset);
    return 2 * m - 1;
}

DihedralElem d_eval_letters(const std::vector<int>& letters) {
    DihedralElem acc = d_identity();
    for (int l : letters) {
        if (l != 1 && l != 2) throw std::invalid_argument("letter must be 1 or 2");
        acc = d_mul(acc, l == 1 ? d_s1() : d_s2());
    }
    return acc;
}

std::vector<int> d_letters(const DihedralElem& e) {
    // Peel generators greedily: prepend the letter that shortens the element.
    std::vector<int> out;
    DihedralElem cur = e;
    while (cur != d_identity()) {
        Int len = word_length(cur);
        DihedralElem c1 = d_mul(d_s1(), cur);
        if (word_length(c1) < len) {
            out.push_back(1);
            cur = c1;
            continue;
        }
        DihedralElem c2 = d_mul(d_s2(), cur);
        if (word_length(c2) >= len)
            throw std::logic_error("no reducing generator; length rule broken");
        out.push_back(2);
        cur = c2;
    }
    return out;
}

std::string d_str(const DihedralElem& e) {
    std::ostringstream os;
    os << "(" << e.offset << (e.reflect ? ",r)" : ",t)");
    return os.str();
}

DihedralElem swap_gens(const DihedralElem& e) {
    return DihedralElem{-e.offset + (e.reflect ? 1 : 0), e.reflect};
}

bool is_epi_a1(const A1Morphism& m) {
    std::vector<Int> refl, trans;
    for (const DihedralElem& e : {m.img1, m.img2})
        (e.reflect ? refl : trans).push_back(e.offset);
    if (refl.empty()) return false;
    Int d = 0;
    for (const Int& t : trans) d = gcd_int(d, t);
    for (std::size_t i = 0; i < refl.size(); ++i)
        for (std::size_t j = i + 1; j < refl.size(); ++j)
            d = gcd_int(d, refl[i] - refl[j]);
    return d == 1;
}

std::vector<DihedralElem> d_ball(int max_len) {
    std::vector<DihedralElem> out;
    for (Int k = -(max_len / 2); k <= max_len / 2; ++k)
        out.push_back(DihedralElem{k, false});
    for (Int k = -max_len; k <= max_len; ++k) {
        DihedralElem e{k, true};
        if (word_length(e) <= max_len) out.push_back(e);
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

A1Morphism apply_a1_auto(const A1Morphism& m, const DihedralElem& c, bool swap) {
    DihedralElem ci = d_inverse(c);
    auto f = [&](DihedralElem e) {
        if (swap) e = swap_gens(e);
        return d_mul(c, d_mul(e, ci));
    };
    return A1Morphism{f(m.img1), f(m.img2)};
}

}  // namespace

bool a1_equivalent(const A1Morphism& a, const A1Morphism& b, int conj_bound) {
    for (const DihedralElem& c : d_ball(conj_bound))
        for (bool swap : {false, true})
            if (apply_a1_auto(a, c, swap) == b) return true;
    return false;
}

std::vector<A1Morphism> family1_pairs(int max_len) {
    std::vector<A1Morphism> out;
    const DihedralElem len2[2] = {d_mul(d_s1(), d_s2()), d_mul(d_s2(), d_s1())};
    for (int q = 1; q <= max_len; q += 2) {
        DihedralElem w = prod_q(d_s1(), d_s2(), q);
        for (const DihedralElem& wp : len2)
            if (word_length(w) <= max_len && max_len >= 2)
                out.push_back(A1Morphism{w, wp});
    }
    return out;
}

std::vector<A1Morphism> family2_pairs(int max_len) {
    std::vector<A1Morphism> out;
    if (max_len < 2) return out;
    DihedralElem wp = d_mul(d_s1(), d_s2());
    for (int q = 1; q <= max_len; q += 2)
        out.push_back(A1Morphism{wp, prod_q(d_s1(), d_s2(), q)});
    return out;
}

A1ClassifyReport classify_bounded(int max_len, int conj_bound) {
    if (max_len < 1 || max_len > 11) throw std::invalid_argument("max_len must be in 1..11");
    if (conj_bound < 0 || conj_bound > 8)
        throw std::invalid_argument("conj_bound must be in 0..8");

    A1ClassifyReport rep;
    rep.max_len = max_len;
    rep.conj_bound = conj_bound;

    std::vector<DihedralElem> ball = d_ball(max_len);
    std::vector<A1Morphism> epis;
    for (const DihedralElem& a : ball)
        for (const DihedralElem& b : ball) {
            A1Morphism m{a, b};
            if (is_epi_a1(m)) epis.push_back(m);
        }
    rep.epi_pairs = static_cast<int>(epis.size());

    std::map<A1Morphism, int> index;
    for (int i = 0; i < static_cast<int>(epis.size()); ++i) index.emplace(epis[i], i);

    std::vector<int> parent(epis.size());
    std::iota(parent.begin(), parent.end(), 0);
    std::function<int(int)> find = [&](int x) {
        while (parent[x] != x) x = parent[x] = parent[parent[x]];
        return x;
    };

    std::vector<DihedralElem> conjs = d_ball(conj_bound);
    for (int i = 0; i < static_cast<int>(epis.size()); ++i)
        for (const DihedralElem& c : conjs)
            for (bool swap : {false, true}) {
                auto it = index.find(apply_a1_auto(epis[i], c, swap));
                if (it != index.end()) parent[find(i)] = find(it->second);
            }

    std::vector<A1Morphism> fam1 = family1_pairs(max_len);
    std::vector<A1Morphism> fam2 = family2_pairs(max_len);
    std::set<A1Morphism> fam1_set(fam1.begin(), fam1.end());
    std::set<A1Morphism> fam2_set(fam2.begin(), fam2.end());

    std::map<int, A1Class> classes;
    for (int i = 0; i < static_cast<int>(epis.size()); ++i) {
        A1Class& cls = classes[find(i)];
        if (cls.size == 0 || epis[i] < cls.representative) cls.representative = epis[i];
        ++cls.size;
        cls.matches_family1 = cls.matches_family1 || fam1_set.count(epis[i]) > 0;
        cls.matches_family2 = cls.matches_family2 || fam2_set.count(epis[i]) > 0;
    }
    for (auto& [root, cls] : classes) {
        if (!cls.matches_family1 && !cls.matches_family2)
            rep.extras.push_back(cls.representative);
        rep.classes.push_back(cls);
    }
    std::sort(rep.classes.begin(), rep.classes.end(),
              [](const A1Class& a, const A1Class& b) {
                  return a.representative < b.representative;
              });
    std::sort(rep.extras.begin(), rep.extras.end());

    for (const auto& fam : {fam1, fam2})
        for (const A1Morphism& m : fam)
            if (!index.count(m)) rep.missing.push_back(m);
    std::sort(rep.missing.begin(), rep.missing.end());
    rep.missing.erase(std::unique(rep.missing.begin(), rep.missing.end(),
                                  [](const A1Morphism& a, const A1Morphism& b) {
                                      return a == b;
                                  }),
                      rep.missing.end());
    return rep;
}

}  // namespace artin
