#include "tamelat/lattice.hpp"

#include <algorithm>
#include <map>
#include <string>

namespace tamelat {

GramMatrix::GramMatrix(IntMatrix entries, std::size_t max_dimension)
    : entries_(std::move(entries)), factors_{RatMatrix(1, 1), {}} {
    if (!entries_.is_square()) {
        throw DimensionError("Gram matrix must be square");
    }
    if (entries_.rows() > max_dimension) {
        throw ConfigError("dimension " + std::to_string(entries_.rows()) + " exceeds the configured cap of " +
                          std::to_string(max_dimension));
    }
    factors_ = ldlt(entries_);
}

GramMatrix GramMatrix::restricted_to(const IntMatrix& basis) const {
    if (basis.rows() != dim()) {
        throw DimensionError("sublattice basis has the wrong number of rows");
    }
    return GramMatrix(basis.transpose() * entries_ * basis);
}

Integer inner(const GramMatrix& gram, const CoeffVector& u, const CoeffVector& v) {
    if (u.size() != gram.dim() || v.size() != gram.dim()) {
        throw DimensionError("vector length does not match the Gram dimension");
    }
    Integer total = 0;
    for (std::size_t i = 0; i < gram.dim(); ++i) {
        if (u[i] == 0) {
            continue;
        }
        Integer row = 0;
        for (std::size_t j = 0; j < gram.dim(); ++j) {
            row += gram(i, j) * v[j];
        }
        total += u[i] * row;
    }
    return total;
}

Integer norm_sq(const GramMatrix& gram, const CoeffVector& v) { return inner(gram, v, v); }

Integer volume_sq(const GramMatrix& gram) { return det_exact(gram.entries()); }

Integer index_of(const IntMatrix& sub_basis, std::size_t dim) {
    if (sub_basis.rows() != dim || sub_basis.cols() != dim) {
        throw DimensionError("sublattice basis must be " + std::to_string(dim) + "x" + std::to_string(dim));
    }
    Integer det = det_exact(sub_basis);
    if (det == 0) {
        throw RankError("sublattice basis is rank deficient");
    }
    return abs(det);
}

namespace {

// Fincke-Pohst over G = L D L^T. With y = L^T x, x^T G x = sum_j D_j y_j^2 and
// y_j = x_j - c_j where c_j depends only on x_{j+1..n-1}. Levels run from the
// last coordinate down to the first.
class Enumerator {
public:
    using Visitor = std::function<void(const CoeffVector&, const Integer&)>;

    Enumerator(const GramMatrix& gram, Integer radius, const EnumerationLimits& limits)
        : radius(std::move(radius)),
          lower_(gram.factors().lower),
          diag_(gram.factors().diagonal),
          n_(gram.dim()),
          limits_(limits),
          x_(n_) {}

    std::uint64_t run(const Visitor& visit) {
        visit_ = &visit;
        descend(n_ - 1, Rational(0), true);
        return nodes_;
    }

    Integer radius;

private:
    bool feasible(const Rational& partial, std::size_t level, const Integer& value, const Rational& center,
                  Rational& next) const {
        Rational offset = value - center;
        next = partial + diag_[level] * offset * offset;
        return next <= radius;
    }

    void tick() {
        if (++nodes_ > limits_.max_nodes) {
            throw BudgetExceededError("enumeration exceeded the node budget of " +
                                      std::to_string(limits_.max_nodes));
        }
    }

    void child(std::size_t level, const Integer& value, const Rational& next, bool top) {
        x_[level] = value;
        const bool still_top = top && value == 0;
        if (level == 0) {
            if (still_top) {
                return;  // zero vector
            }
            // the partial sum at the leaf is the (integral) norm
            (*visit_)(x_, next.get_num());
        } else {
            descend(level - 1, next, still_top);
        }
        x_[level] = 0;
    }

    void descend(std::size_t level, const Rational& partial, bool top) {
        Rational center = 0;
        for (std::size_t i = level + 1; i < n_; ++i) {
            if (x_[i] != 0) {
                center -= lower_(i, level) * x_[i];
            }
        }
        // nearest integer to the center; the feasible set is an interval around it
        Rational shifted = center + Rational(1, 2);
        Integer nearest;
        mpz_fdiv_q(nearest.get_mpz_t(), shifted.get_num_mpz_t(), shifted.get_den_mpz_t());

        // Only one of each +/- pair: while every higher coordinate is zero the
        // current one is taken non-negative.
        Integer start = (top && nearest < 0) ? Integer(0) : nearest;
        Rational next;
        for (Integer value = start; feasible(partial, level, value, center, next); ++value) {
            tick();
            child(level, value, next, top);
        }
        for (Integer value = start - 1; (!top || value >= 0) && feasible(partial, level, value, center, next);
             --value) {
            tick();
            child(level, value, next, top);
        }
    }

    const RatMatrix& lower_;
    const std::vector<Rational>& diag_;
    std::size_t n_;
    EnumerationLimits limits_;
    CoeffVector x_;
    const Visitor* visit_ = nullptr;
    std::uint64_t nodes_ = 0;
};

}  // namespace

std::uint64_t for_each_within(const GramMatrix& gram, const Integer& radius_sq,
                              const std::function<void(const CoeffVector&, const Integer&)>& visit,
                              const EnumerationLimits& limits) {
    Enumerator enumerator(gram, radius_sq, limits);
    return enumerator.run(visit);
}

CoeffVector canonical_sign(CoeffVector v) {
    auto first = std::find_if(v.begin(), v.end(), [](const Integer& c) { return c != 0; });
    if (first != v.end() && *first < 0) {
        for (auto& c : v) {
            c = -c;
        }
    }
    return v;
}

ShortVectorReport enumerate_short(const GramMatrix& gram, std::optional<Integer> radius_sq,
                                  const EnumerationLimits& limits) {
    Integer radius;
    if (radius_sq) {
        if (*radius_sq <= 0) {
            throw PreconditionError("enumeration radius must be positive");
        }
        radius = *radius_sq;
    } else {
        radius = gram(0, 0);
        for (std::size_t i = 1; i < gram.dim(); ++i) {
            radius = std::min(radius, Integer(gram(i, i)));
        }
    }

    Enumerator enumerator(gram, radius, limits);
    std::vector<CoeffVector> found;
    const std::uint64_t nodes = enumerator.run([&](const CoeffVector& v, const Integer& norm) {
        if (norm < enumerator.radius) {
            enumerator.radius = norm;
            found.clear();
        }
        found.push_back(canonical_sign(v));
    });
    if (found.empty()) {
        throw PreconditionError("no nonzero lattice vector within radius " + radius.get_str());
    }
    std::sort(found.begin(), found.end());

    ShortVectorReport report;
    report.lambda1 = enumerator.radius;
    report.kissing_number = 2 * found.size();
    report.minimal_vectors = std::move(found);
    report.nodes = nodes;
    return report;
}

bool is_well_rounded(const ShortVectorReport& report, std::size_t dim) {
    return rank(IntMatrix::from_columns(report.minimal_vectors)) == dim;
}

bool is_strongly_wr(const ShortVectorReport& report, std::size_t dim) {
    ColumnEchelon echelon = column_echelon(IntMatrix::from_columns(report.minimal_vectors));
    if (echelon.columns.size() != dim) {
        return false;
    }
    for (std::size_t j = 0; j < dim; ++j) {
        if (echelon.columns[j][echelon.pivot_rows[j]] != 1) {
            return false;
        }
    }
    return true;
}

namespace {

bool extend_basis(const std::vector<CoeffVector>& pool, std::size_t start, std::size_t dim,
                  std::vector<CoeffVector>& chosen) {
    if (chosen.size() == dim) {
        return true;
    }
    const std::size_t needed = dim - chosen.size();
    for (std::size_t i = start; i + needed <= pool.size(); ++i) {
        chosen.push_back(pool[i]);
        if (is_primitive_system(chosen) && extend_basis(pool, i + 1, dim, chosen)) {
            return true;
        }
        chosen.pop_back();
    }
    return false;
}

}  // namespace

std::optional<std::vector<CoeffVector>> find_minimal_basis(const ShortVectorReport& report, std::size_t dim) {
    std::vector<CoeffVector> pool = report.minimal_vectors;
    std::sort(pool.begin(), pool.end());
    std::vector<CoeffVector> chosen;
    if (extend_basis(pool, 0, dim, chosen)) {
        return chosen;
    }
    return std::nullopt;
}

bool has_minimal_basis(const ShortVectorReport& report, std::size_t dim) {
    return find_minimal_basis(report, dim).has_value();
}

bool is_well_rounded(const GramMatrix& gram, const EnumerationLimits& limits) {
    return is_well_rounded(enumerate_short(gram, std::nullopt, limits), gram.dim());
}

bool is_strongly_wr(const GramMatrix& gram, const EnumerationLimits& limits) {
    return is_strongly_wr(enumerate_short(gram, std::nullopt, limits), gram.dim());
}

bool has_minimal_basis(const GramMatrix& gram, const EnumerationLimits& limits) {
    return has_minimal_basis(enumerate_short(gram, std::nullopt, limits), gram.dim());
}

Rational center_density_sq(const GramMatrix& gram, const Integer& lambda1) {
    const unsigned long n = gram.dim();
    Integer numerator;
    mpz_pow_ui(numerator.get_mpz_t(), lambda1.get_mpz_t(), n);
    Integer four_pow;
    mpz_ui_pow_ui(four_pow.get_mpz_t(), 4, n);
    Rational out(numerator, four_pow * volume_sq(gram));
    out.canonicalize();
    return out;
}

Rational center_density_sq(const GramMatrix& gram, const EnumerationLimits& limits) {
    return center_density_sq(gram, enumerate_short(gram, std::nullopt, limits).lambda1);
}

namespace {

struct IsometrySearch {
    const GramMatrix& gram;
    const GramMatrix& target;
    std::map<Integer, std::vector<CoeffVector>> by_norm;
    std::vector<CoeffVector> chosen;

    bool extend() {
        const std::size_t k = chosen.size();
        if (k == target.dim()) {
            return true;
        }
        auto it = by_norm.find(target(k, k));
        if (it == by_norm.end()) {
            return false;
        }
        for (const auto& candidate : it->second) {
            // v and -v are interchangeable for the first vector
            if (k == 0 && canonical_sign(candidate) != candidate) {
                continue;
            }
            bool consistent = true;
            for (std::size_t i = 0; i < k && consistent; ++i) {
                consistent = inner(gram, chosen[i], candidate) == target(i, k);
            }
            if (!consistent) {
                continue;
            }
            chosen.push_back(candidate);
            if (is_primitive_system(chosen) && extend()) {
                return true;
            }
            chosen.pop_back();
        }
        return false;
    }
};

}  // namespace

std::optional<IntMatrix> find_isometry(const GramMatrix& gram, const GramMatrix& target,
                                       const EnumerationLimits& limits) {
    if (gram.dim() != target.dim()) {
        return std::nullopt;
    }
    if (volume_sq(gram) != volume_sq(target)) {
        return std::nullopt;
    }
    Integer radius = target(0, 0);
    for (std::size_t i = 1; i < target.dim(); ++i) {
        radius = std::max(radius, Integer(target(i, i)));
    }
    IsometrySearch search{gram, target, {}, {}};
    for_each_within(
        gram, radius,
        [&](const CoeffVector& v, const Integer& norm) {
            CoeffVector negated = v;
            for (auto& c : negated) {
                c = -c;
            }
            search.by_norm[norm].push_back(v);
            search.by_norm[norm].push_back(std::move(negated));
        },
        limits);
    for (auto& [norm, vectors] : search.by_norm) {
        std::sort(vectors.begin(), vectors.end());
    }
    if (!search.extend()) {
        return std::nullopt;
    }
    return IntMatrix::from_columns(search.chosen);
}

}  // namespace tamelat
