#include "tamelat/tame.hpp"

#include <algorithm>
#include <string>

namespace tamelat {
namespace {

IntMatrix constant_gram(std::size_t n, const Integer& diagonal, const Integer& off_diagonal) {
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            out(i, j) = (i == j) ? diagonal : off_diagonal;
        }
    }
    return out;
}

std::size_t validated_dim(std::size_t n) {
    if (n < 2) {
        throw PreconditionError("tame lattice needs N >= 2 (got " + std::to_string(n) + ")");
    }
    return n;
}

// The tame Gram has eigenvalues 1 (along v1) and 1 + Nh (N-1 times), so it is
// positive definite exactly when h >= 0.
Integer validated_h(Integer h, std::size_t n) {
    if (h < 0) {
        throw NotPositiveDefiniteError("tame Gram with h = " + h.get_str() + " has eigenvalue 1 + Nh = " +
                                       Integer(1 + Integer(n) * h).get_str() + " <= 0");
    }
    return h;
}

Integer pow_ui(const Integer& base, unsigned long exponent) {
    Integer out;
    mpz_pow_ui(out.get_mpz_t(), base.get_mpz_t(), exponent);
    return out;
}

}  // namespace

TameParams::TameParams(std::size_t n, Integer h)
    : n_(validated_dim(n)),
      h_(validated_h(std::move(h), n_)),
      a_(1 + Integer(n_ - 1) * h_),
      gram_(constant_gram(n_, a_, -h_)) {}

RSPair::RSPair(const TameParams& params, Integer r, Integer s) : r_(std::move(r)), s_(std::move(s)) {
    const Integer n = params.dim();
    if (r_ == 0 || abs(r_) >= n) {
        throw PreconditionError("need 0 < |r| < N (r = " + r_.get_str() + ", N = " + n.get_str() + ")");
    }
    m_ = r_ + s_ * n;
    A_ = r_ * r_;
    const Integer numerator = m_ * m_ - A_;
    if (numerator % n != 0) {
        throw TheoremFalsifiedError("m^2 - r^2 not divisible by N");
    }
    B_ = numerator / n;
}

ConstructionParams RSPair::construction(const TameParams& params) const {
    return ConstructionParams(params.trace_form(), r_, s_, params.v1());
}

GramMatrix tame_gram(const TameParams& params) { return params.gram(); }

Integer trace_T(const TameParams& params, const CoeffVector& x) {
    if (x.size() != params.dim()) {
        throw DimensionError("trace_T: dimension mismatch");
    }
    Integer total = 0;
    for (const auto& c : x) {
        total += c;
    }
    return total;
}

Integer f_value(const TameParams& params, const RSPair& rs, const CoeffVector& x) {
    const Integer t = trace_T(params, x);
    return rs.A() * norm_sq(params.gram(), x) + rs.B() * t * t;
}

GramMatrix sublattice_gram(const TameParams& params, const RSPair& rs) {
    if (rs.m() == 0) {
        throw DegenerateMapError("m = 0");
    }
    return GramMatrix(constant_gram(params.dim(), params.a() * rs.A() + rs.B(), -rs.A() * params.h() + rs.B()));
}

GramMatrix kernel_lattice_gram(const TameParams& params) {
    const std::size_t n = params.dim() - 1;
    const Integer scale = params.a() + params.h();
    IntMatrix out(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        out(i, i) = 2 * scale;
        if (i + 1 < n) {
            out(i, i + 1) = -scale;
            out(i + 1, i) = -scale;
        }
    }
    return GramMatrix(out);
}

Integer indicator_norm_sq(const TameParams& params, std::size_t k) {
    if (k > params.dim()) {
        throw PreconditionError("|I| exceeds N");
    }
    return Integer(k) * (1 + Integer(params.dim() - k) * params.h());
}

Integer min_over_Sd(const TameParams& params, const RSPair& rs, const Integer& d) {
    if (d <= 0) {
        throw PreconditionError("min_over_Sd needs d >= 1; use S_{-d} = -S_d");
    }
    const Integer n = params.dim();
    const Integer k = d % n;
    const Integer c = (d - k) / n;
    const std::size_t k_size = k.get_ui();
    const Integer f_indicator = rs.A() * indicator_norm_sq(params, k_size) + rs.B() * k * k;
    const Integer a_plus_nb = rs.A() + n * rs.B();
    const Integer f_v1 = n * a_plus_nb;
    return f_indicator + c * c * f_v1 + 2 * c * k * a_plus_nb;
}

MainBounds check_main_bounds(const TameParams& params, const RSPair& rs) {
    const Integer n = params.dim();
    const Integer& a = params.a();
    MainBounds out;
    out.lower = Rational(n * a - 1, n * n - 1);
    out.upper = Rational((a * n - 1) * (n + 1), n - 1);
    out.value = Rational(rs.m() * rs.m(), rs.A());
    out.lower.canonicalize();
    out.upper.canonicalize();
    out.value.canonicalize();
    out.lower_holds = out.lower <= out.value;
    out.upper_holds = out.value <= out.upper;
    out.holds = out.lower_holds && out.upper_holds;
    return out;
}

Integer predicted_lambda1(const TameParams& params, const RSPair& rs) {
    const Integer n = params.dim();
    const Integer basis_norm = params.a() * rs.A() + rs.B();
    if (basis_norm > n * (rs.A() + n * rs.B())) {
        throw NotApplicableError("aA + B > N(A + NB): closed form does not apply");
    }
    return std::min(Integer(2 * rs.A() * (params.a() + params.h())), basis_norm);
}

VerificationReport verify_main_theorem(const TameParams& params, const RSPair& rs, const EnumerationLimits& limits) {
    const std::size_t n = params.dim();
    VerificationReport report;
    report.n = n;
    report.h = params.h();
    report.a = params.a();
    report.r = rs.r();
    report.s = rs.s();
    report.m = rs.m();
    report.negative_m = rs.m() < 0;
    report.bounds = check_main_bounds(params, rs);
    report.predicted_lambda1 = params.a() * rs.A() + rs.B();

    // Index: |det| of the image basis against |m| |r|^(N-1).
    const LinearForm form = params.trace_form();
    report.image_basis = phi_basis_matrix(form, rs.construction(params), n);
    report.index_computed = index_of(report.image_basis, n);
    report.index_predicted = abs(rs.m()) * pow_ui(abs(rs.r()), n - 1);
    if (report.index_computed != report.index_predicted) {
        throw TheoremFalsifiedError("index " + report.index_computed.get_str() + " != |m||r|^(N-1) = " +
                                    report.index_predicted.get_str());
    }

    // The closed-form Gram must agree with C^T G C.
    const GramMatrix sub = sublattice_gram(params, rs);
    if (!(params.gram().restricted_to(report.image_basis) == sub)) {
        throw TheoremFalsifiedError("closed-form sublattice Gram differs from C^T G C");
    }

    const ShortVectorReport svp = enumerate_short(sub, std::nullopt, limits);
    report.enumerated_lambda1 = svp.lambda1;
    report.kissing_number = svp.kissing_number;
    report.center_density_sq = center_density_sq(sub, svp.lambda1);

    // In sublattice coordinates the image basis is the standard basis, so its
    // determinant there is 1 by construction.
    report.basis_det_in_sublattice = det_exact(IntMatrix::identity(n));
    report.basis_is_minimal = true;
    for (std::size_t i = 0; i < n; ++i) {
        CoeffVector unit(n, Integer(0));
        unit[i] = 1;
        report.basis_vectors_norms.push_back(norm_sq(sub, unit));
        const bool listed = std::binary_search(svp.minimal_vectors.begin(), svp.minimal_vectors.end(), unit);
        report.basis_is_minimal = report.basis_is_minimal && listed && report.basis_vectors_norms.back() == svp.lambda1;
    }

    if (report.bounds.lower_holds) {
        report.corollary_lambda1 = predicted_lambda1(params, rs);
        if (*report.corollary_lambda1 != svp.lambda1) {
            throw TheoremFalsifiedError("min{2A(a+h), aA+B} = " + report.corollary_lambda1->get_str() +
                                        " but enumeration found " + svp.lambda1.get_str());
        }
    }

    if (report.bounds.holds) {
        if (report.predicted_lambda1 != svp.lambda1) {
            throw TheoremFalsifiedError("predicted lambda1 " + report.predicted_lambda1.get_str() +
                                        " but enumeration found " + svp.lambda1.get_str());
        }
        if (!report.basis_is_minimal || std::abs(report.basis_det_in_sublattice.get_si()) != 1) {
            throw TheoremFalsifiedError("image basis is not a basis of minimal vectors");
        }
        report.status = VerificationStatus::pass;
    } else {
        report.status = VerificationStatus::not_applicable;
    }
    return report;
}

}  // namespace tamelat
