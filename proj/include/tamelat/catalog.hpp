#pragma once

#include <cstddef>
#include <string>
#include <vector>

#include "tamelat/tame.hpp"

namespace tamelat {

/// Gram data (N, a, h) of a number field with a Lagrangian integral basis.
/// Only the congruence conditions are checked; that a field with the given
/// degree and conductor exists is the caller's assertion.
struct FieldFamilyEntry {
    std::string label;
    std::size_t n = 0;
    Integer conductor;
    Integer a;
    Integer h;
    std::string provenance;

    TameParams params() const { return TameParams(n, h); }
};

bool is_prime(const Integer& value);

/// Tame cyclic field of odd prime degree p and conductor n = 1 mod p:
/// a = (n(p-1)+1)/p, h = (n-1)/p.
FieldFamilyEntry conner_perlis(const Integer& p, const Integer& conductor);

/// Tame abelian field of degree N with prime conductor n = 1 mod N.
FieldFamilyEntry prime_conductor_abelian(std::size_t degree, const Integer& conductor);

/// The cyclic quartic field Q[x]/(x^4 - x^3 - 24x^2 + 4x + 16) of conductor 65.
FieldFamilyEntry example3_entry();

/// Every m >= 2 with m = +/-r_abs (mod N) and (m/r_abs)^2 inside the closed
/// minimal-basis bounds, in increasing order.
std::vector<Integer> admissible_m_values(const TameParams& params, const Integer& r_abs = 1);
std::vector<Integer> admissible_m_values(const FieldFamilyEntry& entry, const Integer& r_abs = 1);

enum class ReferenceLattice { cubic, root_a, root_d };

/// Basis (columns) of D_n in Z^n: e_i + e_{i+1} for i < n, then e_{n-1} - e_n.
IntMatrix d_lattice_basis(std::size_t n);

/// cubic -> identity, A_n -> 2 on the diagonal and -1 beside it,
/// D_n -> Gram of d_lattice_basis(n).
GramMatrix reference_gram(ReferenceLattice kind, std::size_t n);
ReferenceLattice parse_reference_lattice(const std::string& name);

/// Z^N together with (1/k, ..., 1/k), with the form scaled by k^2 to make it
/// integral. Basis: the glue vector followed by e_1..e_{N-1}. For N > k^2 > 1
/// it is well rounded but not strongly well rounded.
GramMatrix wr_not_swr_gram(std::size_t n, const Integer& k);

}  // namespace tamelat
