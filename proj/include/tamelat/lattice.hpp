#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "tamelat/exact_linalg.hpp"

namespace tamelat {

inline constexpr std::size_t kDefaultMaxDimension = 64;
inline constexpr std::uint64_t kDefaultNodeBudget = 100'000'000;

/// Symmetric positive-definite integer Gram matrix. Validated on construction;
/// immutable afterwards, so the cached LDL^T factors stay valid.
class GramMatrix {
public:
    explicit GramMatrix(IntMatrix entries, std::size_t max_dimension = kDefaultMaxDimension);

    std::size_t dim() const { return entries_.rows(); }
    const IntMatrix& entries() const { return entries_; }
    const Integer& operator()(std::size_t i, std::size_t j) const { return entries_(i, j); }
    const LdltFactors& factors() const { return factors_; }

    /// The Gram matrix of the sublattice whose basis columns are `basis`
    /// in this lattice's coordinates: basis^T G basis.
    GramMatrix restricted_to(const IntMatrix& basis) const;

    friend bool operator==(const GramMatrix& lhs, const GramMatrix& rhs) { return lhs.entries_ == rhs.entries_; }

private:
    IntMatrix entries_;
    LdltFactors factors_;
};

struct EnumerationLimits {
    std::uint64_t max_nodes = kDefaultNodeBudget;
};

struct ShortVectorReport {
    Integer lambda1;                         ///< squared minimum
    std::vector<CoeffVector> minimal_vectors; ///< one per +/- pair, first nonzero coordinate positive, sorted
    std::size_t kissing_number = 0;           ///< counts both signs
    std::uint64_t nodes = 0;
};

/// v^T G v.
Integer norm_sq(const GramMatrix& gram, const CoeffVector& v);

/// u^T G v.
Integer inner(const GramMatrix& gram, const CoeffVector& u, const CoeffVector& v);

/// det(G), i.e. vol(L)^2.
Integer volume_sq(const GramMatrix& gram);

/// [L : L'] for a sublattice basis given in parent coordinates.
Integer index_of(const IntMatrix& sub_basis, std::size_t dim);

/// Calls `visit` once per +/- pair for every nonzero v with v^T G v <= radius_sq.
/// The representative passed has its last nonzero coordinate positive.
/// Returns the number of search nodes visited.
std::uint64_t for_each_within(const GramMatrix& gram, const Integer& radius_sq,
                              const std::function<void(const CoeffVector&, const Integer&)>& visit,
                              const EnumerationLimits& limits = {});

/// Exact shortest vectors by Fincke-Pohst enumeration over the LDL^T factors,
/// shrinking the radius as shorter vectors appear. With no radius the search
/// starts from the smallest diagonal entry. Throws BudgetExceededError rather
/// than returning a partial answer.
ShortVectorReport enumerate_short(const GramMatrix& gram, std::optional<Integer> radius_sq = std::nullopt,
                                  const EnumerationLimits& limits = {});

/// Flips v so its first nonzero coordinate is positive.
CoeffVector canonical_sign(CoeffVector v);

bool is_well_rounded(const ShortVectorReport& report, std::size_t dim);
bool is_strongly_wr(const ShortVectorReport& report, std::size_t dim);
/// Depth-first search over lexicographically sorted minimal vectors, pruning
/// any partial selection that cannot extend to a basis. Returns the first
/// basis found.
std::optional<std::vector<CoeffVector>> find_minimal_basis(const ShortVectorReport& report, std::size_t dim);
bool has_minimal_basis(const ShortVectorReport& report, std::size_t dim);

bool is_well_rounded(const GramMatrix& gram, const EnumerationLimits& limits = {});
bool is_strongly_wr(const GramMatrix& gram, const EnumerationLimits& limits = {});
bool has_minimal_basis(const GramMatrix& gram, const EnumerationLimits& limits = {});

/// delta^2 = lambda1^N / (4^N det G).
Rational center_density_sq(const GramMatrix& gram, const Integer& lambda1);
Rational center_density_sq(const GramMatrix& gram, const EnumerationLimits& limits = {});

/// Searches for a basis of `gram`'s lattice whose Gram matrix is exactly
/// `target`; returns the basis (columns, in `gram` coordinates) if the two
/// lattices are isometric. Exhaustive over vectors of norm <= max target
/// diagonal, so only practical in small dimension.
std::optional<IntMatrix> find_isometry(const GramMatrix& gram, const GramMatrix& target,
                                       const EnumerationLimits& limits = {});

}  // namespace tamelat
