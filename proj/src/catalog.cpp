#include "tamelat/catalog.hpp"

namespace tamelat {

bool is_prime(const Integer& value) {
    if (value < 2) {
        return false;
    }
    for (Integer d = 2; d * d <= value; ++d) {
        if (value % d == 0) {
            return false;
        }
    }
    return true;
}

namespace {

FieldFamilyEntry make_entry(std::string label, std::size_t n, const Integer& conductor, std::string provenance) {
    const Integer degree = n;
    if ((conductor - 1) % degree != 0) {
        throw PreconditionError("invalid conductor: " + conductor.get_str() + " is not 1 mod " + degree.get_str());
    }
    FieldFamilyEntry entry;
    entry.label = std::move(label);
    entry.n = n;
    entry.conductor = conductor;
    entry.a = (conductor * (degree - 1) + 1) / degree;
    entry.h = (conductor - 1) / degree;
    entry.provenance = std::move(provenance);
    if (entry.a - (degree - 1) * entry.h != 1) {
        throw TheoremFalsifiedError("catalog entry violates a - (N-1)h = 1");
    }
    return entry;
}

}  // namespace

FieldFamilyEntry conner_perlis(const Integer& p, const Integer& conductor) {
    if (p < 3 || !is_prime(p)) {
        throw PreconditionError("conner-perlis family needs an odd prime degree (got " + p.get_str() + ")");
    }
    if (conductor < 2) {
        throw PreconditionError("invalid conductor: " + conductor.get_str());
    }
    return make_entry("conner-perlis p=" + p.get_str() + " n=" + conductor.get_str(), p.get_ui(), conductor,
                      "tame cyclic field of prime degree");
}

FieldFamilyEntry prime_conductor_abelian(std::size_t degree, const Integer& conductor) {
    if (degree < 2) {
        throw PreconditionError("degree must be at least 2");
    }
    if (!is_prime(conductor)) {
        throw PreconditionError("invalid conductor: " + conductor.get_str() + " is not prime");
    }
    return make_entry("prime-conductor N=" + std::to_string(degree) + " n=" + conductor.get_str(), degree,
                      conductor, "tame abelian field of prime conductor");
}

FieldFamilyEntry example3_entry() {
    FieldFamilyEntry entry = make_entry("Q[x]/(x^4-x^3-24x^2+4x+16), conductor 65", 4, 65, "cyclic quartic field");
    return entry;
}

std::vector<Integer> admissible_m_values(const TameParams& params, const Integer& r_abs) {
    const Integer n = params.dim();
    if (r_abs <= 0 || r_abs >= n) {
        throw PreconditionError("need 0 < |r| < N");
    }
    const Integer& a = params.a();
    // lower <= (m/r)^2 <= upper, cross-multiplied to stay in integers:
    //   (Na - 1) r^2 <= m^2 (N^2 - 1),   m^2 (N - 1) <= (aN - 1)(N + 1) r^2
    const Integer r2 = r_abs * r_abs;
    std::vector<Integer> out;
    for (Integer m = 2; m * m * (n - 1) <= (a * n - 1) * (n + 1) * r2; ++m) {
        const Integer residue = m % n;
        const bool congruent = residue == r_abs % n || residue == (n - r_abs) % n;
        if (congruent && (n * a - 1) * r2 <= m * m * (n * n - 1)) {
            out.push_back(m);
        }
    }
    return out;
}

std::vector<Integer> admissible_m_values(const FieldFamilyEntry& entry, const Integer& r_abs) {
    return admissible_m_values(entry.params(), r_abs);
}

IntMatrix d_lattice_basis(std::size_t n) {
    if (n < 2) {
        throw PreconditionError("D_n needs n >= 2");
    }
    IntMatrix basis(n, n);
    for (std::size_t j = 0; j + 1 < n; ++j) {
        basis(j, j) = 1;
        basis(j + 1, j) = 1;
    }
    basis(n - 2, n - 1) = 1;
    basis(n - 1, n - 1) = -1;
    return basis;
}

GramMatrix reference_gram(ReferenceLattice kind, std::size_t n) {
    if (n < 1) {
        throw PreconditionError("reference lattice needs n >= 1");
    }
    switch (kind) {
        case ReferenceLattice::cubic:
            return GramMatrix(IntMatrix::identity(n));
        case ReferenceLattice::root_a: {
            IntMatrix g(n, n);
            for (std::size_t i = 0; i < n; ++i) {
                g(i, i) = 2;
                if (i + 1 < n) {
                    g(i, i + 1) = -1;
                    g(i + 1, i) = -1;
                }
            }
            return GramMatrix(g);
        }
        case ReferenceLattice::root_d: {
            const IntMatrix b = d_lattice_basis(n);
            return GramMatrix(b.transpose() * b);
        }
    }
    throw PreconditionError("unknown reference lattice");
}

ReferenceLattice parse_reference_lattice(const std::string& name) {
    if (name == "cubic" || name == "Z") {
        return ReferenceLattice::cubic;
    }
    if (name == "A" || name == "root-a") {
        return ReferenceLattice::root_a;
    }
    if (name == "D" || name == "root-d") {
        return ReferenceLattice::root_d;
    }
    throw PreconditionError("unknown reference lattice '" + name + "'");
}

GramMatrix wr_not_swr_gram(std::size_t n, const Integer& k) {
    if (n < 2 || k < 1) {
        throw PreconditionError("need N >= 2 and k >= 1");
    }
    IntMatrix g(n, n);
    g(0, 0) = Integer(n);  // <v, v> k^2 = N
    for (std::size_t i = 1; i < n; ++i) {
        g(0, i) = k;  // <v, e_i> k^2 = k
        g(i, 0) = k;
        g(i, i) = k * k;
    }
    return GramMatrix(g);
}

}  // namespace tamelat
