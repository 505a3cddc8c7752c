#include "artin/families.hpp"

#include <map>

namespace artin {

std::string family_name(FamilyId f) {
    switch (f) {
        case FamilyId::L1: return "L1";
        case FamilyId::L2: return "L2";
        case FamilyId::L3: return "L3";
        case FamilyId::L4: return "L4";
        case FamilyId::L5: return "L5";
        case FamilyId::L6: return "L6";
        case FamilyId::L7: return "L7";
        case FamilyId::YP: return "YP";
        case FamilyId::MU: return "MU";
    }
    throw std::logic_error("unknown family");
}

FamilyId family_from_name(const std::string& s) {
    static const std::map<std::string, FamilyId> m = {
        {"L1", FamilyId::L1}, {"L2", FamilyId::L2}, {"L3", FamilyId::L3},
        {"L4", FamilyId::L4}, {"L5", FamilyId::L5}, {"L6", FamilyId::L6},
        {"L7", FamilyId::L7}, {"YP", FamilyId::YP}, {"MU", FamilyId::MU}};
    auto it = m.find(s);
    if (it == m.end()) throw std::invalid_argument("unknown family name: " + s);
    return it->second;
}

int family_fixed_rank(FamilyId f) {
    switch (f) {
        case FamilyId::L2: return 6;
        case FamilyId::L3:
        case FamilyId::L4:
        case FamilyId::L5:
        case FamilyId::L6:
        case FamilyId::L7: return 4;
        default: return 0;  // L1 / YP / MU: free rank
    }
}

int family_arity(FamilyId f, int n) {
    switch (f) {
        case FamilyId::L1: return n + 1;
        case FamilyId::YP: return 2;
        case FamilyId::MU: return 0;
        case FamilyId::L2: return 5;
        case FamilyId::L5: return 4;
        default: return 3;  // L3 / L4 / L6 / L7
    }
}

void validate_spec(const MorphismSpec& spec) {
    int fixed = family_fixed_rank(spec.family);
    if (fixed != 0 && spec.n != fixed)
        throw std::invalid_argument(family_name(spec.family) + " has fixed rank " +
                                    std::to_string(fixed));
    if (spec.n < 2) throw std::invalid_argument("rank must be at least 2");
    int want = family_arity(spec.family, spec.n);
    if (static_cast<int>(spec.params.size()) != want)
        throw std::invalid_argument(family_name(spec.family) + " takes " +
                                    std::to_string(want) + " parameters, got " +
                                    std::to_string(spec.params.size()));
}

namespace detail {

// Shorthand for one image row: translation entries then printed cycles.
template <class S>
AffineElem<S> img(std::vector<S> t, const std::vector<std::vector<int>>& cycles) {
    int n = static_cast<int>(t.size());
    return AffineElem<S>(std::move(t), Perm::from_cycles(n, cycles).inverse());
}

template <class S>
GenImages<S> build_family(FamilyId f, int n, const std::vector<S>& x) {
    const S zero(0);
    switch (f) {
        case FamilyId::L1: {
            std::vector<S> xs(x.begin(), x.end() - 1);
            return build_l1<S>(n, xs, x.back());
        }
        case FamilyId::YP: {
            // L1 with x_1..x_{n-1} = 0, x_n = p, parameters ordered (y, p).
            std::vector<S> xs(n, zero);
            xs[n - 1] = x[1];
            return build_l1<S>(n, xs, x[0]);
        }
        case FamilyId::MU: {
            std::vector<S> xs(n, zero);
            xs[n - 1] = S(1);
            return build_l1<S>(n, xs, zero);
        }
        case FamilyId::L2: {
            const S &x1 = x[0], &x2 = x[1], &x3 = x[2], &x4 = x[3], &x5 = x[4];
            return {
                img<S>({x1 - x2 + x5 - x4, -x1 + x2 - x5 + x4, -x1 + x3, x1 - x3, -x2, x2},
                       {{1, 2}, {3, 4}, {5, 6}}),
                img<S>({x1 - x2 + x5 - x3 - x4, -x5 - x1 + x2, -x1 + x2 - x5 + x3 + x4, -x5,
                        x5 + x1 - x2, x5},
                       {{1, 3}, {2, 5}, {4, 6}}),
                img<S>({-x2 + x5 - x4, -x3, x3, x2 - x5 + x4, -x2, x2},
                       {{1, 4}, {2, 3}, {5, 6}}),
                img<S>({x1 - x2 + x5 - x4, -x1 + x2 - x5 + x4, -x1 + x2 - x5 + x3, -x5,
                        x1 - x2 + x5 - x3, x5},
                       {{1, 2}, {3, 5}, {4, 6}}),
                img<S>({x1 - x2 + x5 - x3 - x4, -x1, -x1 + x2 - x5 + x3 + x4, x1, -x2, x2},
                       {{1, 3}, {2, 4}, {5, 6}}),
                img<S>({-x4, -x3, x3, -x5, x4, x5}, {{1, 5}, {2, 3}, {4, 6}}),
            };
        }
        case FamilyId::L3: {
            const S &x1 = x[0], &x2 = x[1], &x3 = x[2];
            AffineElem<S> a = img<S>({x3, -x3 - x1 - x2, x1, x2}, {{1, 2, 3, 4}});
            return {a,
                    img<S>({-x2 - x1, -x3, x1, x2 + x3}, {{1, 3, 4, 2}}),
                    a,
                    img<S>({x3, -x2 - x3, x2 + x1, -x1}, {{1, 2, 4, 3}})};
        }
        case FamilyId::L4: {
            const S &x1 = x[0], &x2 = x[1], &x3 = x[2];
            AffineElem<S> a = img<S>({-x1, -x2 - x3, x2, x1 + x3}, {{1, 2, 3, 4}});
            AffineElem<S> b = img<S>({-x3 - x1 - x2, x1, x2, x3}, {{1, 3, 4, 2}});
            return {a, b, a, b};
        }
        case FamilyId::L5: {
            const S &x1 = x[0], &x2 = x[1], &x3 = x[2], &x4 = x[3];
            AffineElem<S> b = img<S>({x3, x4, -(2 * x3) - x4, x3}, {{2, 3}});
            return {img<S>({x1, -x1 - (2 * x3), x3, x3}, {{1, 2}}),
                    b,
                    img<S>({x3, x3, x2, -(2 * x3) - x2}, {{3, 4}}),
                    b};
        }
        case FamilyId::L6: {
            const S &x1 = x[0], &x2 = x[1], &x3 = x[2];
            AffineElem<S> b = img<S>({x2, -x2 - x1, x1 + x3, -x3}, {{1, 3, 4, 2}});
            return {img<S>({x2, x3, x1, -x2 - x3 - x1}, {{1, 3, 2, 4}}),
                    b,
                    img<S>({x2 + x3 + x1, -x1, -x2, -x3}, {{1, 4, 2, 3}}),
                    b};
        }
        case FamilyId::L7: {
            const S &x1 = x[0], &x2 = x[1], &x3 = x[2];
            return {img<S>({x2 + x3 + x1, -x1, -x3, -x2}, {{1, 3, 2, 4}}),
                    img<S>({x2 + x3 + x1, -x1 - x2, -x1 - x3, x1}, {{1, 3, 4, 2}}),
                    img<S>({x2, x3, -x2 - x3 - x1, x1}, {{1, 4, 2, 3}}),
                    img<S>({x1 + x2, -x1, -x2 - x3 - x1, x1 + x3}, {{1, 2, 4, 3}})};
        }
    }
    throw std::logic_error("unknown family");
}

template GenImages<Int> build_family<Int>(FamilyId, int, const std::vector<Int>&);
template GenImages<LinForm> build_family<LinForm>(FamilyId, int, const std::vector<LinForm>&);

}  // namespace detail

GenImagesInt build_images(const MorphismSpec& spec) {
    validate_spec(spec);
    return detail::build_family<Int>(spec.family, spec.n, spec.params);
}

GenImagesForm build_images_symbolic(FamilyId f, int n) {
    int fixed = family_fixed_rank(f);
    if (fixed != 0) n = fixed;
    std::vector<LinForm> params;
    for (int j = 1; j <= family_arity(f, n); ++j) params.push_back(LinForm::var(j));
    return detail::build_family<LinForm>(f, n, params);
}

TranslationSpace solve_translation_space(int n, const std::vector<Perm>& perm_parts) {
    if (static_cast<int>(perm_parts.size()) != n)
        throw std::invalid_argument("need one permutation per generator");
    // Unknowns: t[i][c] for generator i and coordinate c, flattened i*n + c.
    const int vars = n * n;
    std::vector<std::vector<Rat>> rows;
    auto coeff_row = [&] { return std::vector<Rat>(vars + 1, Rat(0)); };
    auto add_moved = [&](std::vector<Rat>& row, int gen, const Perm& by, int c, const Rat& k) {
        // contribution k * (by . t[gen])_c = k * t[gen][by^{-1}(c)]
        row[gen * n + by.inverse()(c)] += k;
    };
    for (int i = 0; i < n; ++i) {
        // sum-zero constraint for generator i
        auto row = coeff_row();
        for (int c = 0; c < n; ++c) row[i * n + c] = 1;
        rows.push_back(std::move(row));
        for (int j = i + 1; j < n; ++j) {
            bool adjacent = (j == i + 1) || (i == 0 && j == n - 1);
            if (n == 3) adjacent = true;
            if (n == 2) continue;  // no relation between the two generators
            const Perm &pi = perm_parts[i], &pj = perm_parts[j];
            for (int c = 0; c < n; ++c) {
                auto row = coeff_row();
                if (adjacent) {
                    // t_i + pi.t_j + (pi pj).t_i = t_j + pj.t_i + (pj pi).t_j
                    row[i * n + c] += 1;
                    add_moved(row, j, pi, c, 1);
                    add_moved(row, i, pi * pj, c, 1);
                    row[j * n + c] -= 1;
                    add_moved(row, i, pj, c, -1);
                    add_moved(row, j, pj * pi, c, -1);
                } else {
                    // t_i + pi.t_j = t_j + pj.t_i
                    row[i * n + c] += 1;
                    add_moved(row, j, pi, c, 1);
                    row[j * n + c] -= 1;
                    add_moved(row, i, pj, c, -1);
                }
                rows.push_back(std::move(row));
            }
        }
    }
    // Gaussian elimination over Q; the system is homogeneous, so it is
    // always consistent and the solution space has dimension vars - rank.
    int rank = 0;
    int col = 0;
    for (; col < vars && rank < static_cast<int>(rows.size()); ++col) {
        int piv = -1;
        for (int r = rank; r < static_cast<int>(rows.size()); ++r)
            if (rows[r][col] != 0) {
                piv = r;
                break;
            }
        if (piv < 0) continue;
        std::swap(rows[rank], rows[piv]);
        Rat lead = rows[rank][col];
        for (int r = 0; r < static_cast<int>(rows.size()); ++r) {
            if (r == rank || rows[r][col] == 0) continue;
            Rat factor = rows[r][col] / lead;
            for (int c2 = col; c2 <= vars; ++c2) rows[r][c2] -= factor * rows[rank][c2];
        }
        ++rank;
    }
    return TranslationSpace{vars - rank, true};
}

YpNormalization normalize_to_yp(const MorphismSpec& spec) {
    if (spec.family != FamilyId::L1)
        throw std::invalid_argument("normalize_to_yp expects an L1 morphism");
    validate_spec(spec);
    const int n = spec.n;
    const Int y = spec.params[n];  // y is the last parameter
    GenImagesInt ims = build_images(spec);
    // Conjugator: extended-lattice translation v_k = -(x_1 + ... + x_{k-1}).
    std::vector<Int> v(n, 0);
    Int acc = 0;
    for (int k = 1; k < n; ++k) {
        acc += spec.params[k - 1];
        v[k] = -acc;
    }
    AffInt conj_elem(std::move(v), Perm::identity(n));
    GenImagesInt out;
    out.reserve(n);
    for (const auto& e : ims) out.push_back(conj_elem * e * conj_elem.inverse());
    Int p = out[n - 1].t[0];
    GenImagesInt target = build_images({FamilyId::YP, n, {y, p}});
    if (!(out == target))
        throw std::logic_error("normalization did not reach the (y,p) form");
    return YpNormalization{y, p, conj_elem, std::move(out)};
}

}  // namespace artin
