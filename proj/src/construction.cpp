#include "tamelat/construction.hpp"

#include <string>

namespace tamelat {

LinearForm::LinearForm(CoeffVector weights) : weights_(std::move(weights)), cokernel_size_(0) {
    if (weights_.empty()) {
        throw DimensionError("linear form needs at least one weight");
    }
    for (const auto& w : weights_) {
        cokernel_size_ = gcd(cokernel_size_, w);
    }
    if (cokernel_size_ == 0) {
        throw PreconditionError("linear form must be nontrivial");
    }
}

LinearForm LinearForm::coordinate_sum(std::size_t n) { return LinearForm(CoeffVector(n, Integer(1))); }

Integer LinearForm::operator()(const CoeffVector& x) const {
    if (x.size() != weights_.size()) {
        throw DimensionError("vector length does not match the linear form");
    }
    Integer total = 0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        total += weights_[i] * x[i];
    }
    return total;
}

ConstructionParams::ConstructionParams(const LinearForm& form, Integer r, Integer s, CoeffVector v1)
    : r_(std::move(r)), s_(std::move(s)), v1_(std::move(v1)) {
    trace_v1_ = form(v1_);
    if (trace_v1_ == 0) {
        throw PreconditionError("v1 must lie outside ker T");
    }
    if (r_ == 0) {
        throw PreconditionError("r must be nonzero");
    }
    if (abs(r_) >= abs(trace_v1_)) {
        throw PreconditionError("need |r| < |T(v1)| (r = " + r_.get_str() + ", T(v1) = " + trace_v1_.get_str() + ")");
    }
    m_ = r_ + s_ * trace_v1_;
}

Integer ConstructionParams::m() const {
    Integer m = r_ + s_ * trace_v1_;
    if (m != m_) {
        throw TheoremFalsifiedError("stored m is stale");
    }
    return m;
}

CoeffVector apply_phi(const LinearForm& form, const ConstructionParams& params, const CoeffVector& x) {
    if (x.size() != form.dim() || params.v1().size() != form.dim()) {
        throw DimensionError("apply_phi: dimension mismatch");
    }
    const Integer scale = params.s() * form(x);
    CoeffVector out(x.size());
    for (std::size_t i = 0; i < x.size(); ++i) {
        out[i] = params.r() * x[i] + scale * params.v1()[i];
    }
    return out;
}

IntMatrix phi_basis_matrix(const LinearForm& form, const ConstructionParams& params, std::size_t dim) {
    if (form.dim() != dim) {
        throw DimensionError("phi_basis_matrix: dimension mismatch");
    }
    if (params.m() == 0) {
        throw DegenerateMapError("m = 0: Phi_(r,s) is not injective");
    }
    std::vector<CoeffVector> columns;
    for (std::size_t i = 0; i < dim; ++i) {
        CoeffVector unit(dim, Integer(0));
        unit[i] = 1;
        columns.push_back(apply_phi(form, params, unit));
    }
    return IntMatrix::from_columns(columns);
}

IntMatrix congruence_lattice_basis(const LinearForm& form, const Integer& m, std::size_t dim) {
    if (form.dim() != dim) {
        throw DimensionError("congruence_lattice_basis: dimension mismatch");
    }
    if (m < 1) {
        throw PreconditionError("congruence modulus must be positive");
    }
    // {x : T(x) = 0 mod M} is the projection to the first N coordinates of the
    // integer kernel of the 1 x (N+1) system [w_1 ... w_N | M]; the projection
    // is injective, so the N kernel vectors project onto a basis.
    IntMatrix system(1, dim + 1);
    for (std::size_t i = 0; i < dim; ++i) {
        system(0, i) = form.weights()[i];
    }
    system(0, dim) = m * form.cokernel_size();
    std::vector<CoeffVector> kernel = integer_kernel(system);
    IntMatrix basis(dim, dim);
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t i = 0; i < dim; ++i) {
            basis(i, j) = kernel.at(j)[i];
        }
    }
    return hnf(basis);
}

bool phi_image_is_congruence_lattice(const LinearForm& form, const ConstructionParams& params) {
    return same_lattice(phi_basis_matrix(form, params, form.dim()),
                        congruence_lattice_basis(form, abs(params.m()), form.dim()));
}

bool check_cong1_equality(const LinearForm& form, const ConstructionParams& params) {
    if (abs(params.r()) != 1) {
        throw PreconditionError("equality check requires r = +/-1 (got r = " + params.r().get_str() + ")");
    }
    if (form.cokernel_size() != 1) {
        throw PreconditionError("equality check requires a surjective T (n_T = " + form.cokernel_size().get_str() +
                                ")");
    }
    Integer residue;
    const Integer modulus = abs(params.trace_v1());
    mpz_fdiv_r(residue.get_mpz_t(), params.m().get_mpz_t(), modulus.get_mpz_t());
    if (residue != 1 % modulus && residue != (modulus - 1) % modulus) {
        throw PreconditionError("equality check requires m = +/-1 mod T(v1)");
    }
    return phi_image_is_congruence_lattice(form, params);
}

}  // namespace tamelat
