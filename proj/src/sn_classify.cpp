#include "artin/sn_classify.hpp"

#include "artin/relations.hpp"

#include <map>
#include <set>
#include <stdexcept>

namespace artin {

namespace {

long long factorial_ll(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool braid_ok(const Perm& a, const Perm& b) { return a * b * a == b * a * b; }
bool comm_ok(const Perm& a, const Perm& b) { return a * b == b * a; }

std::vector<Perm> all_perms(int n) {
    std::vector<int> img(n);
    for (int i = 0; i < n; ++i) img[i] = i;
    std::vector<Perm> out;
    do {
        out.emplace_back(img);
    } while (std::next_permutation(img.begin(), img.end()));
    return out;
}

}  // namespace

std::size_t subgroup_order(const std::vector<Perm>& gens, int n) {
    if (n > 8) throw std::invalid_argument("subgroup_order limited to n <= 8");
    std::set<Perm> seen;
    std::vector<Perm> frontier;
    Perm id(n);
    seen.insert(id);
    frontier.push_back(id);
    while (!frontier.empty()) {
        std::vector<Perm> next;
        for (const Perm& v : frontier) {
            for (const Perm& g : gens) {
                Perm w = v * g;
                if (seen.insert(w).second) next.push_back(std::move(w));
            }
        }
        frontier = std::move(next);
    }
    return seen.size();
}

bool SnHom::relations_ok() const {
    for (int i = 1; i <= n; ++i) {
        for (int j = i + 1; j <= n; ++j) {
            const Perm &a = perms[i - 1], &b = perms[j - 1];
            if (cycle_graph_adjacent(i, j, n)) {
                if (!braid_ok(a, b)) return false;
            } else {
                if (!comm_ok(a, b)) return false;
            }
        }
    }
    return true;
}

bool SnHom::surjective() const {
    return subgroup_order(perms, n) == static_cast<std::size_t>(factorial_ll(n));
}

std::vector<int> SnHom::key() const {
    std::vector<int> k;
    k.reserve(static_cast<std::size_t>(n) * n);
    for (const Perm& p : perms)
        k.insert(k.end(), p.images().begin(), p.images().end());
    return k;
}

bool operator==(const SnHom& a, const SnHom& b) {
    return a.n == b.n && a.perms == b.perms;
}
bool operator<(const SnHom& a, const SnHom& b) {
    if (a.n != b.n) return a.n < b.n;
    return a.key() < b.key();
}

SnHom conjugate_hom(const SnHom& h, const Perm& g) {
    SnHom out;
    out.n = h.n;
    Perm gi = g.inverse();
    out.perms.reserve(h.perms.size());
    for (const Perm& p : h.perms) out.perms.push_back(g * p * gi);
    return out;
}

SnHom canonical_rep(const SnHom& h) {
    SnHom best = h;
    std::vector<int> best_key = h.key();
    for (const Perm& g : all_perms(h.n)) {
        SnHom c = conjugate_hom(h, g);
        std::vector<int> k = c.key();
        if (k < best_key) {
            best_key = std::move(k);
            best = std::move(c);
        }
    }
    return best;
}

bool sn_homs_conjugate(const SnHom& a, const SnHom& b) {
    if (a.n != b.n) return false;
    return canonical_rep(a) == canonical_rep(b);
}

SnHom precompose_graph_auto(const SnHom& h, int rot, bool flip) {
    const int n = h.n;
    SnHom out;
    out.n = n;
    out.perms.resize(h.perms.size(), Perm(n));
    for (int i = 1; i <= n; ++i) {
        int pos = ((i - 1 + rot) % n + n) % n + 1;
        if (flip) pos = (pos == 1) ? 1 : n + 2 - pos;
        out.perms[i - 1] = h.perms[pos - 1];
    }
    return out;
}

SnHom canonical_rep_mod_graph(const SnHom& h) {
    SnHom best = canonical_rep(h);
    for (int rot = 0; rot < h.n; ++rot) {
        for (int flip = 0; flip < 2; ++flip) {
            SnHom c = canonical_rep(precompose_graph_auto(h, rot, flip != 0));
            if (c < best) best = c;
        }
    }
    return best;
}

ClassifyResult enumerate_surjective_homs(int n, long long budget) {
    if (n < 3 || n > 5)
        throw std::invalid_argument("enumeration supported for n in {3,4,5}");
    ClassifyResult res;
    std::vector<Perm> universe = all_perms(n);

    // First image restricted to one representative per conjugacy class
    // (any tuple is conjugate to one whose first image is a representative).
    std::vector<Perm> first;
    std::set<std::vector<int>> seen_types;
    for (const Perm& p : universe)
        if (seen_types.insert(p.cycle_type()).second) first.push_back(p);

    std::set<std::vector<int>> class_keys;
    std::vector<SnHom> classes;
    std::vector<Perm> stack;

    auto compatible = [&](const Perm& cand) {
        int k = static_cast<int>(stack.size());  // cand would become sigma_{k+1}
        for (int i = 1; i <= k; ++i) {
            if (cycle_graph_adjacent(i, k + 1, n)) {
                if (!braid_ok(stack[i - 1], cand)) return false;
            } else {
                if (!comm_ok(stack[i - 1], cand)) return false;
            }
        }
        return true;
    };

    bool stop = false;
    auto rec = [&](auto&& self) -> void {
        if (stop) return;
        if (static_cast<int>(stack.size()) == n) {
            SnHom h{n, stack};
            if (h.surjective()) {
                SnHom rep = canonical_rep(h);
                if (class_keys.insert(rep.key()).second) classes.push_back(rep);
            }
            return;
        }
        const std::vector<Perm>& cands =
            stack.empty() ? first : universe;
        for (const Perm& cand : cands) {
            ++res.nodes;
            if (budget >= 0 && res.nodes > budget) {
                res.budget_exhausted = true;
                stop = true;
                return;
            }
            if (!compatible(cand)) continue;
            stack.push_back(cand);
            self(self);
            stack.pop_back();
            if (stop) return;
        }
    };
    rec(rec);

    std::sort(classes.begin(), classes.end());
    res.classes = classes;

    std::set<std::vector<int>> merged_keys;
    for (const SnHom& h : classes) {
        SnHom rep = canonical_rep_mod_graph(h);
        if (merged_keys.insert(rep.key()).second)
            res.classes_mod_graph.push_back(rep);
    }
    std::sort(res.classes_mod_graph.begin(), res.classes_mod_graph.end());
    return res;
}

ExpandResult expand_from_sigma1_D(int n, const Perm& sigma1, const Perm& D,
                                  const std::optional<Perm>& sigma_n) {
    auto build = [&](bool mirror) {
        SnHom h;
        h.n = n;
        h.perms.push_back(sigma1);
        Perm Di = D.inverse();
        for (int i = 1; i <= n - 2; ++i) {
            const Perm& prev = h.perms.back();
            h.perms.push_back(mirror ? Di * prev * D : D * prev * Di);
        }
        if (sigma_n) {
            h.perms.push_back(*sigma_n);
        } else {
            const Perm& prev = h.perms.back();
            h.perms.push_back(mirror ? Di * prev * D : D * prev * Di);
        }
        return h;
    };
    ExpandResult r;
    r.hom = build(false);
    if (r.hom.relations_ok()) {
        r.relations_ok = true;
    } else {
        SnHom m = build(true);
        if (m.relations_ok()) {
            r.hom = std::move(m);
            r.used_mirror = true;
            r.relations_ok = true;
        }
    }
    if (r.relations_ok) r.surjective = r.hom.surjective();
    return r;
}

SnHom standard_hom(int n) {
    SnHom h;
    h.n = n;
    for (int i = 1; i < n; ++i)
        h.perms.push_back(Perm::from_cycles(n, {{i, i + 1}}));
    h.perms.push_back(Perm::from_cycles(n, {{1, n}}));
    return h;
}

std::vector<SnHom> encoded_reference_homs(int n) {
    // Printed cycle data is parsed and then inverted, matching the
    // library-wide convention for transcribed permutation words.
    auto pc = [n](const std::vector<std::vector<int>>& cycles) {
        return Perm::from_cycles(n, cycles).inverse();
    };
    std::vector<SnHom> out;
    out.push_back(standard_hom(n));
    if (n == 4) {
        auto expand4 = [&](const std::vector<int>& c1, const std::vector<int>& cD,
                           const std::vector<int>& c4) {
            ExpandResult r =
                expand_from_sigma1_D(4, pc({c1}), pc({cD}), pc({c4}));
            if (!r.relations_ok)
                throw std::logic_error("encoded rank-4 tuple fails relations");
            return r.hom;
        };
        out.push_back(expand4({1, 2, 3, 4}, {1, 2}, {1, 2, 4, 3}));
        out.push_back(expand4({1, 2, 3, 4}, {1, 2}, {1, 3, 4, 2}));
        SnHom rep5;  // repeated second transposition
        rep5.n = 4;
        rep5.perms = {pc({{1, 2}}), pc({{2, 3}}), pc({{3, 4}}), pc({{2, 3}})};
        out.push_back(rep5);
        out.push_back(expand4({1, 3, 2, 4}, {1, 2, 3, 4}, {1, 3, 4, 2}));
        out.push_back(expand4({1, 3, 2, 4}, {1, 2, 3, 4}, {1, 2, 4, 3}));
    } else if (n == 6) {
        ExpandResult r = expand_from_sigma1_D(
            6, Perm::from_cycles(6, {{1, 2}, {3, 4}, {5, 6}}),
            Perm::from_cycles(6, {{1, 2, 3}, {4, 5}}).inverse(),
            Perm::from_cycles(6, {{1, 5}, {2, 3}, {4, 6}}));
        if (!r.relations_ok)
            throw std::logic_error("encoded rank-6 tuple fails relations");
        out.push_back(r.hom);
    }
    return out;
}

}  // namespace artin
