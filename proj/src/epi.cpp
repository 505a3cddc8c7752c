#include "artin/epi.hpp"

#include "artin/kernel.hpp"
#include "artin/sn_classify.hpp"

namespace artin {

namespace {

long long factorial_ll(int n) {
    long long f = 1;
    for (int i = 2; i <= n; ++i) f *= i;
    return f;
}

bool yp_condition(int n, const Int& y, const Int& p) {
    if (gcd_int(y, p) != 1) return false;
    if (n % 2 == 1) return true;
    return p % 2 != 0;
}

}  // namespace

EpiVerdict is_epimorphism(const MorphismSpec& spec) {
    validate_spec(spec);
    GenImagesInt images = build_images(spec);
    std::vector<Perm> perms;
    perms.reserve(images.size());
    for (const auto& e : images) perms.push_back(e.p);

    EpiVerdict v;
    v.sn_surjective =
        subgroup_order(perms, spec.n) ==
        static_cast<std::size_t>(factorial_ll(spec.n));

    std::vector<Word> words;
    if (spec.n <= 6)
        words = schreier_words(perms);
    else
        words = kernel_words_printed(KernelSet::ALL, spec.n);

    GenMatrix mat;
    mat.n = spec.n;
    mat.rows = kernel_rows(images, words);
    auto [full, factors] = lattice_is_full(mat);
    v.lattice_full = full;
    v.invariant_factors = std::move(factors);
    v.is_epi = v.sn_surjective && v.lattice_full;
    return v;
}

bool predicted_is_epi(const MorphismSpec& spec, L5Third l5_variant) {
    validate_spec(spec);
    const auto& x = spec.params;
    auto unit = [](const Int& v) { return v == 1 || v == -1; };
    switch (spec.family) {
        case FamilyId::MU:
            return true;
        case FamilyId::YP:
            return yp_condition(spec.n, x[0], x[1]);
        case FamilyId::L1: {
            YpNormalization norm = normalize_to_yp(spec);
            return yp_condition(spec.n, norm.y, norm.p);
        }
        case FamilyId::L2:
            return false;
        case FamilyId::L3:
            return unit((x[2] - x[0]) * (x[2] + x[0]) * (x[2] + x[0] + 2 * x[1]));
        case FamilyId::L4:
            return unit((x[1] - x[0]) * (x[1] + x[0]) * (x[1] + x[0] + 2 * x[2]));
        case FamilyId::L6:
        case FamilyId::L7:
            return unit((x[2] - x[1]) * (x[2] + x[1]) * (x[2] + x[1] + 2 * x[0]));
        case FamilyId::L5: {
            const Int &x1 = x[0], &x2 = x[1], &x3 = x[2], &x4 = x[3];
            if ((x1 + x3) % 2 == 0) return false;
            if (gcd_int(gcd_int(x1, x3), x4) != 1) return false;
            Int p = x1 + x3 + 2 * x4;
            Int q = x1 - x3;
            Int third = (l5_variant == L5Third::PShifted) ? p + 2 * x2
                                                          : x1 + x2 + x3 + 2 * x4;
            return gcd_int(x4, p) == 1 && gcd_int(x4, q) == 1 &&
                   gcd_int(x4, third) == 1;
        }
    }
    throw std::logic_error("unknown family");
}

}  // namespace artin
