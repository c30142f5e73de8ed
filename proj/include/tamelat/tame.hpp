#pragma once

#include <cstddef>
#include <optional>
#include <vector>

#include "tamelat/construction.hpp"
#include "tamelat/lattice.hpp"

namespace tamelat {

/// A tame lattice with Lagrangian basis e_1..e_N: <e_i,e_i> = a, <e_i,e_j> = -h,
/// v1 = e_1 + ... + e_N, T(x) = <x, v1> = coordinate sum. The Lagrangian
/// conditions force a = 1 + (N-1) h.
class TameParams {
public:
    TameParams(std::size_t n, Integer h);

    std::size_t dim() const { return n_; }
    const Integer& h() const { return h_; }
    const Integer& a() const { return a_; }
    const GramMatrix& gram() const { return gram_; }
    LinearForm trace_form() const { return LinearForm::coordinate_sum(n_); }
    CoeffVector v1() const { return CoeffVector(n_, Integer(1)); }

private:
    std::size_t n_;
    Integer h_;
    Integer a_;
    GramMatrix gram_;
};

/// (r, s) with 0 < |r| < N, m = r + sN, A = r^2, B = (m^2 - r^2)/N.
class RSPair {
public:
    RSPair(const TameParams& params, Integer r, Integer s);

    const Integer& r() const { return r_; }
    const Integer& s() const { return s_; }
    const Integer& m() const { return m_; }
    const Integer& A() const { return A_; }
    const Integer& B() const { return B_; }

    ConstructionParams construction(const TameParams& params) const;

private:
    Integer r_, s_, m_, A_, B_;
};

struct MainBounds {
    bool holds = false;
    bool lower_holds = false;
    bool upper_holds = false;
    Rational lower;  ///< (Na - 1)/(N^2 - 1)
    Rational upper;  ///< (aN - 1)(N + 1)/(N - 1)
    Rational value;  ///< (m/r)^2
};

enum class VerificationStatus { pass, not_applicable };

struct VerificationReport {
    std::size_t n = 0;
    Integer h, a, r, s, m;
    bool negative_m = false;

    MainBounds bounds;
    Integer predicted_lambda1;                 ///< a r^2 + (m^2 - r^2)/N
    std::optional<Integer> corollary_lambda1;  ///< min{2A(a+h), aA+B} when the lower bound holds
    Integer enumerated_lambda1;
    std::size_t kissing_number = 0;
    Rational center_density_sq;

    Integer index_predicted;  ///< |m| |r|^(N-1)
    Integer index_computed;   ///< |det| of the image basis

    IntMatrix image_basis{1, 1};  ///< Phi(e_i) as columns, parent coordinates
    std::vector<Integer> basis_vectors_norms;
    bool basis_is_minimal = false;
    Integer basis_det_in_sublattice;

    VerificationStatus status = VerificationStatus::not_applicable;
};

GramMatrix tame_gram(const TameParams& params);

Integer trace_T(const TameParams& params, const CoeffVector& x);

/// f(x) = A ||x||^2 + B T(x)^2, which is ||Phi(x)||^2 in the parent lattice.
Integer f_value(const TameParams& params, const RSPair& rs, const CoeffVector& x);

/// Gram of the image basis: aA + B on the diagonal, -Ah + B off it.
GramMatrix sublattice_gram(const TameParams& params, const RSPair& rs);

/// Gram of the kernel basis w_i = e_i - e_{i+1}: (a+h) times the A_{N-1} Gram.
GramMatrix kernel_lattice_gram(const TameParams& params);

/// ||E_I||^2 = k(1 + (N-k)h) for |I| = k.
Integer indicator_norm_sq(const TameParams& params, std::size_t k);

/// Closed-form minimum of f over S_d = {x : T(x) = d}, d >= 1.
Integer min_over_Sd(const TameParams& params, const RSPair& rs, const Integer& d);

MainBounds check_main_bounds(const TameParams& params, const RSPair& rs);

/// min{2A(a+h), aA+B}; requires aA + B <= N(A + NB), else NotApplicableError.
Integer predicted_lambda1(const TameParams& params, const RSPair& rs);

/// Runs every check of the minimal-basis theorem against exact enumeration.
/// Throws TheoremFalsifiedError if a proven identity fails.
VerificationReport verify_main_theorem(const TameParams& params, const RSPair& rs,
                                       const EnumerationLimits& limits = {});

}  // namespace tamelat
