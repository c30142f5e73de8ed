#include "tamelat/oracle.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <optional>
#include <string>

namespace tamelat::oracle {
namespace {

using Point = std::vector<long>;

// x^T M x evaluated entry by entry. Uses 128-bit accumulation when every term
// provably fits, GMP otherwise.
class DirectForm {
public:
    DirectForm(const IntMatrix& m, long bound) : m_(m), n_(m.rows()) {
        constexpr long kEntryLimit = 1L << 40;
        fast_ = bound <= (1L << 10) && n_ <= 16;
        for (std::size_t i = 0; i < n_ && fast_; ++i) {
            for (std::size_t j = 0; j < n_ && fast_; ++j) {
                fast_ = m(i, j).fits_slong_p() && std::labs(m(i, j).get_si()) <= kEntryLimit;
            }
        }
        if (fast_) {
            small_.resize(n_ * n_);
            for (std::size_t i = 0; i < n_; ++i) {
                for (std::size_t j = 0; j < n_; ++j) {
                    small_[i * n_ + j] = m(i, j).get_si();
                }
            }
        }
    }

    Integer operator()(const Point& x) const {
        if (fast_) {
            __int128 total = 0;
            for (std::size_t i = 0; i < n_; ++i) {
                if (x[i] == 0) {
                    continue;
                }
                for (std::size_t j = 0; j < n_; ++j) {
                    total += static_cast<__int128>(x[i]) * small_[i * n_ + j] * x[j];
                }
            }
            return to_integer(total);
        }
        Integer total = 0;
        for (std::size_t i = 0; i < n_; ++i) {
            for (std::size_t j = 0; j < n_; ++j) {
                total += m_(i, j) * x[i] * x[j];
            }
        }
        return total;
    }

private:
    static Integer to_integer(__int128 value) {
        if (value >= std::numeric_limits<long>::min() && value <= std::numeric_limits<long>::max()) {
            return Integer(static_cast<long>(value));
        }
        const bool negative = value < 0;
        unsigned __int128 magnitude = negative ? -static_cast<unsigned __int128>(value) : value;
        std::string digits;
        while (magnitude > 0) {
            digits.insert(digits.begin(), static_cast<char>('0' + static_cast<int>(magnitude % 10)));
            magnitude /= 10;
        }
        return Integer((negative ? "-" : "") + digits);
    }

    const IntMatrix& m_;
    std::size_t n_;
    bool fast_ = false;
    std::vector<long> small_;
};

// Odometer over [-bound, bound]^dim.
template <typename Visit>
void for_each_point(std::size_t dim, long bound, Visit&& visit) {
    Point x(dim, -bound);
    while (true) {
        visit(x);
        std::size_t i = 0;
        while (i < dim && x[i] == bound) {
            x[i] = -bound;
            ++i;
        }
        if (i == dim) {
            return;
        }
        ++x[i];
    }
}

CoeffVector to_coeffs(const Point& x) { return CoeffVector(x.begin(), x.end()); }

void offer(BoxMinimum& best, bool& seen, const Integer& value, const Point& x) {
    if (!seen || value < best.minimum) {
        best.minimum = value;
        best.argmins.clear();
        seen = true;
    }
    if (value == best.minimum) {
        best.argmins.push_back(to_coeffs(x));
    }
}

Integer isqrt_floor(const Integer& value) {
    Integer root;
    mpz_sqrt(root.get_mpz_t(), value.get_mpz_t());
    return root;
}

}  // namespace

BoxSpec::BoxSpec(std::size_t dim_, long bound_, std::uint64_t ceiling) : dim(dim_), bound(bound_) {
    if (dim == 0) {
        throw DimensionError("box dimension must be positive");
    }
    if (bound < 1) {
        throw PreconditionError("box bound must be at least 1");
    }
    double estimate = std::pow(2.0 * static_cast<double>(bound) + 1.0, static_cast<double>(dim));
    if (estimate > static_cast<double>(ceiling)) {
        throw OracleCeilingError("box of " + std::to_string(dim) + " coordinates with bound " + std::to_string(bound) +
                                 " exceeds the ceiling of " + std::to_string(ceiling) + " points");
    }
}

std::uint64_t BoxSpec::points() const {
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < dim; ++i) {
        total *= static_cast<std::uint64_t>(2 * bound + 1);
    }
    return total;
}

long covering_bound(const GramMatrix& gram, const Integer& radius_sq) {
    // (G^-1)_ii = det(G with row and column i removed) / det(G)
    const std::size_t n = gram.dim();
    const Integer det = det_exact(gram.entries());
    Integer widest = 0;
    for (std::size_t skip = 0; skip < n; ++skip) {
        Integer cofactor = 1;
        if (n > 1) {
            IntMatrix minor(n - 1, n - 1);
            for (std::size_t i = 0, mi = 0; i < n; ++i) {
                if (i == skip) {
                    continue;
                }
                for (std::size_t j = 0, mj = 0; j < n; ++j) {
                    if (j == skip) {
                        continue;
                    }
                    minor(mi, mj++) = gram(i, j);
                }
                ++mi;
            }
            cofactor = det_exact(minor);
        }
        // largest integer t with t^2 <= radius * cofactor / det
        const Integer bound = isqrt_floor(Integer(radius_sq * cofactor / det));
        widest = std::max(widest, bound);
    }
    if (!widest.fits_slong_p()) {
        throw OracleCeilingError("covering box too large");
    }
    return std::max(1L, widest.get_si());
}

BoxMinimum naive_svp(const GramMatrix& gram, const BoxSpec& box) {
    if (box.dim != gram.dim()) {
        throw DimensionError("box dimension does not match the Gram matrix");
    }
    const DirectForm form(gram.entries(), box.bound);
    BoxMinimum best;
    bool seen = false;
    for_each_point(box.dim, box.bound, [&](const Point& x) {
        if (std::all_of(x.begin(), x.end(), [](long c) { return c == 0; })) {
            return;
        }
        offer(best, seen, form(x), x);
    });
    std::sort(best.argmins.begin(), best.argmins.end());
    return best;
}

BoxMinimum brute_min_Sd(const TameParams& params, const RSPair& rs, const Integer& d, const BoxSpec& box,
                        const EnumerationLimits& limits) {
    const std::size_t n = params.dim();
    if (box.dim != n) {
        throw DimensionError("box dimension does not match N");
    }
    if (d <= 0) {
        throw PreconditionError("d must be positive");
    }
    const Integer c = d / Integer(n);
    if (Integer(box.bound) < c + 1) {
        throw PreconditionError("box bound must be at least floor(d/N) + 1");
    }
    if (!d.fits_slong_p()) {
        throw PreconditionError("d out of range");
    }
    const long target = d.get_si();

    // f as a quadratic form: A G + B J, with G written out entry by entry.
    IntMatrix f_form(n, n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const Integer g = (i == j) ? params.a() : Integer(-params.h());
            f_form(i, j) = rs.A() * g + rs.B();
        }
    }
    const DirectForm f(f_form, box.bound);

    // Scan the first N-1 coordinates; the last is forced by T(x) = d.
    BoxMinimum best;
    bool seen = false;
    Point x(n);
    for_each_point(n - 1, box.bound, [&](const Point& head) {
        long sum = 0;
        for (std::size_t i = 0; i + 1 < n; ++i) {
            x[i] = head[i];
            sum += head[i];
        }
        const long last = target - sum;
        if (std::labs(last) > box.bound) {
            return;
        }
        x[n - 1] = last;
        offer(best, seen, f(x), x);
    });
    if (!seen) {
        throw OracleInconsistencyError("box contains no point of S_d");
    }
    std::sort(best.argmins.begin(), best.argmins.end());

    // Certificate: on S_d, f = A ||x||^2 + B d^2, so every point of S_d at or
    // below the box minimum has ||x||^2 <= (min - B d^2) / A in the parent form.
    const Integer slack = best.minimum - rs.B() * d * d;
    if (slack <= 0) {
        throw OracleInconsistencyError("box minimum " + best.minimum.get_str() + " leaves no room for a nonzero x");
    }
    const Integer radius = slack / rs.A();
    bool attained = false;
    for_each_within(
        params.gram(), radius,
        [&](const CoeffVector& v, const Integer& norm) {
            Integer t = 0;
            for (const auto& coord : v) {
                t += coord;
            }
            if (abs(t) != d) {
                return;
            }
            const Integer value = rs.A() * norm + rs.B() * d * d;
            if (value < best.minimum) {
                throw OracleInconsistencyError("enumeration found f = " + value.get_str() +
                                               " on S_d below the box minimum " + best.minimum.get_str());
            }
            attained = attained || value == best.minimum;
        },
        limits);
    if (!attained) {
        throw OracleInconsistencyError("enumeration did not reproduce the box minimum");
    }
    return best;
}

CoeffVector restar_witness(const TameParams& params, const CoeffVector& alpha) {
    if (alpha.size() != params.dim()) {
        throw DimensionError("restar_witness: dimension mismatch");
    }
    const auto hi = std::max_element(alpha.begin(), alpha.end());
    const auto lo = std::min_element(alpha.begin(), alpha.end());
    if (*hi - *lo <= 1) {
        throw NoWitnessError("all coordinates lie within 1 of each other");
    }
    const std::size_t i = static_cast<std::size_t>(hi - alpha.begin());
    const std::size_t j = static_cast<std::size_t>(lo - alpha.begin());
    CoeffVector beta = alpha;
    beta[i] -= 1;
    beta[j] += 1;

    // ||x||^2 summed entry by entry over the tame Gram.
    auto norm = [&](const CoeffVector& x) {
        Integer total = 0;
        for (std::size_t p = 0; p < x.size(); ++p) {
            for (std::size_t q = 0; q < x.size(); ++q) {
                total += x[p] * x[q] * ((p == q) ? params.a() : Integer(-params.h()));
            }
        }
        return total;
    };
    const Integer drop = 2 * (params.a() + params.h()) * (alpha[i] - alpha[j] - 1);
    if (norm(alpha) - norm(beta) != drop || drop <= 0) {
        throw OracleInconsistencyError("descent step did not shorten the vector by 2(a+h)(gap-1)");
    }
    return beta;
}

}  // namespace tamelat::oracle
