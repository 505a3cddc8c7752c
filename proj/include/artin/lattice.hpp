#pragma once
//
// Exact integer-lattice computations on kernel matrices: Smith invariant
// factors, gcd of fixed-size minors, and the fullness criterion.
//
// A set of sum-zero rows generates the full sum-zero lattice of Z^n exactly
// when the rows projected to coordinates 1..n-1 span Z^{n-1}; equivalently,
// all n-1 Smith invariant factors are 1; equivalently, the gcd of the
// (n-1)x(n-1) minors over those columns is 1.
//
#include "artin/ints.hpp"

#include <optional>
#include <utility>
#include <vector>

namespace artin {

using IntMat = std::vector<std::vector<Int>>;

/// Matrix of kernel-generator translation rows.
struct GenMatrix {
    int n = 0;    // ambient coordinate count
    IntMat rows;  // each row sums to zero
};

/// Smith invariant factors d_1 | d_2 | ... (non-negative, zeros trimmed are
/// NOT trimmed: the result always has min(#rows, #cols) entries, with the
/// trailing entries equal to zero when the rank is deficient).
std::vector<Int> snf_invariants(IntMat m);

/// Exact determinant (fraction-free Bareiss elimination).
Int det_exact(IntMat m);

/// gcd of the absolute values of all r x r minors over the chosen columns
/// (1-based; defaults to columns 1..n-1).  The gcd of an empty or all-zero
/// collection is 0.  Throws when r exceeds the available rows/columns.
///
/// Two independent paths are implemented: direct enumeration of all minors
/// and the determinantal divisor d_1*...*d_r from the Smith normal form.
Int minor_gcd(const GenMatrix& m, int r,
              const std::optional<std::vector<int>>& columns = std::nullopt);
Int minor_gcd_enumerate(const GenMatrix& m, int r,
                        const std::optional<std::vector<int>>& columns = std::nullopt);
Int minor_gcd_via_snf(const GenMatrix& m, int r,
                      const std::optional<std::vector<int>>& columns = std::nullopt);

/// Fullness of the generated sub-lattice of the sum-zero lattice: Smith
/// normal form of the rows projected to coordinates 1..n-1; full iff all
/// n-1 invariant factors are 1.  Returns the factors padded with zeros to
/// length n-1.
std::pair<bool, std::vector<Int>> lattice_is_full(const GenMatrix& m);

/// Equality of the row-span lattices of two integer matrices over the same
/// coordinates: both must have the Smith invariants of the stacked matrix
/// (for sublattices of a common lattice, equal invariants force equality).
bool lattices_equal(const IntMat& a, const IntMat& b);

}  // namespace artin
