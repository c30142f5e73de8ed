#pragma once

// Exhaustive cross-checks for the enumeration and closed-form routes. These
// scan boxes coordinate by coordinate and never call the Fincke-Pohst search
// except where a result is explicitly certified against it.

#include <cstddef>
#include <cstdint>
#include <vector>

#include "tamelat/tame.hpp"

namespace tamelat::oracle {

inline constexpr std::uint64_t kDefaultBoxCeiling = 100'000'000;

/// Every coordinate ranges over [-bound, bound].
struct BoxSpec {
    BoxSpec(std::size_t dim, long bound, std::uint64_t ceiling = kDefaultBoxCeiling);

    std::size_t dim;
    long bound;
    std::uint64_t points() const;
};

struct BoxMinimum {
    Integer minimum;
    std::vector<CoeffVector> argmins;  ///< lexicographic order, both signs where applicable
};

/// Smallest box containing every x with x^T G x <= radius_sq, from
/// |x_i|^2 <= radius_sq (G^-1)_ii.
long covering_bound(const GramMatrix& gram, const Integer& radius_sq);

/// Minimum of x^T G x over the nonzero points of the box.
BoxMinimum naive_svp(const GramMatrix& gram, const BoxSpec& box);

/// Minimum of f = A||x||^2 + B T(x)^2 over {x in box : T(x) = d}, certified
/// by enumerating the parent form over the whole coset, so a too-small box
/// raises OracleInconsistencyError instead of passing.
BoxMinimum brute_min_Sd(const TameParams& params, const RSPair& rs, const Integer& d, const BoxSpec& box,
                        const EnumerationLimits& limits = {});

/// One descent step: beta = alpha + e_j - e_i for a coordinate pair with
/// alpha_i - alpha_j >= 2. Throws NoWitnessError when no such pair exists.
CoeffVector restar_witness(const TameParams& params, const CoeffVector& alpha);

}  // namespace tamelat::oracle
