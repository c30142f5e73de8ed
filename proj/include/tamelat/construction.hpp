#pragma once

#include <cstddef>

#include "tamelat/exact_linalg.hpp"

namespace tamelat {

/// A nontrivial homomorphism T: L -> Z, T(x) = sum w_i x_i in lattice coordinates.
class LinearForm {
public:
    explicit LinearForm(CoeffVector weights);

    /// T(x) = 1 + ... + 1 on the standard coordinates of Z^n.
    static LinearForm coordinate_sum(std::size_t n);

    std::size_t dim() const { return weights_.size(); }
    const CoeffVector& weights() const { return weights_; }
    /// n_T = [Z : T(L)] = gcd of the weights.
    const Integer& cokernel_size() const { return cokernel_size_; }

    Integer operator()(const CoeffVector& x) const;

private:
    CoeffVector weights_;
    Integer cokernel_size_;
};

/// (r, s, v1) for the map x -> r x + s T(x) v1, with m = r + s T(v1).
class ConstructionParams {
public:
    /// Requires r != 0, T(v1) != 0 and |r| < |T(v1)|.
    ConstructionParams(const LinearForm& form, Integer r, Integer s, CoeffVector v1);

    const Integer& r() const { return r_; }
    const Integer& s() const { return s_; }
    const CoeffVector& v1() const { return v1_; }
    const Integer& trace_v1() const { return trace_v1_; }
    /// Recomputed from (r, s, T(v1)) and checked against the stored value.
    Integer m() const;

private:
    Integer r_;
    Integer s_;
    CoeffVector v1_;
    Integer trace_v1_;
    Integer m_;
};

/// r x + s T(x) v1. Satisfies T(result) = m T(x).
CoeffVector apply_phi(const LinearForm& form, const ConstructionParams& params, const CoeffVector& x);

/// Columns are the images of the standard basis vectors. |det| = |m| |r|^(N-1).
/// Throws DegenerateMapError when m = 0.
IntMatrix phi_basis_matrix(const LinearForm& form, const ConstructionParams& params, std::size_t dim);

/// HNF basis of {x : T(x) = 0 mod m n_T}, a sublattice of index m.
IntMatrix congruence_lattice_basis(const LinearForm& form, const Integer& m, std::size_t dim);

/// True iff Phi_(r,s)(L) equals the congruence lattice of modulus |m|, for any
/// admissible (r, s). Equality holds exactly when r = +/-1.
bool phi_image_is_congruence_lattice(const LinearForm& form, const ConstructionParams& params);

/// The r = +/-1 equality check. Requires r = +/-1, n_T = 1 and m = +/-1 mod T(v1);
/// each violation is reported with its own message.
bool check_cong1_equality(const LinearForm& form, const ConstructionParams& params);

}  // namespace tamelat
