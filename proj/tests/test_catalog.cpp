#include <doctest.h>

#include "tamelat/catalog.hpp"

using namespace tamelat;

namespace {

std::vector<Integer> ints(std::initializer_list<long> values) { return {values.begin(), values.end()}; }

}  // namespace

TEST_CASE("primality by trial division") {
    CHECK_FALSE(is_prime(0));
    CHECK_FALSE(is_prime(1));
    CHECK(is_prime(2));
    CHECK(is_prime(13));
    CHECK_FALSE(is_prime(65));
    CHECK(is_prime(7919));
}

TEST_CASE("cyclic prime-degree family") {
    const FieldFamilyEntry e = conner_perlis(5, 11);
    CHECK(e.a == 9);
    CHECK(e.h == 2);
    const FieldFamilyEntry cubic = conner_perlis(3, 7);
    CHECK(cubic.a == 5);
    CHECK(cubic.h == 2);
    CHECK_THROWS_AS(conner_perlis(5, 12), PreconditionError);
    CHECK_THROWS_AS(conner_perlis(4, 9), PreconditionError);
    CHECK_THROWS_AS(conner_perlis(2, 5), PreconditionError);
}

TEST_CASE("prime-conductor family") {
    const FieldFamilyEntry sextic = prime_conductor_abelian(6, 13);
    CHECK(sextic.a == 11);
    CHECK(sextic.h == 2);
    const FieldFamilyEntry quadratic = prime_conductor_abelian(2, 5);
    CHECK(quadratic.a == 3);
    CHECK(quadratic.h == 2);
    CHECK_THROWS_AS(prime_conductor_abelian(4, 11), PreconditionError);
    CHECK_THROWS_AS(prime_conductor_abelian(4, 21), PreconditionError);
}

TEST_CASE("families agree where both apply") {
    for (long p : {3, 5, 7}) {
        for (long n = 2; n < 120; ++n) {
            if (!is_prime(n) || n % p != 1) continue;
            const FieldFamilyEntry cp = conner_perlis(p, n);
            const FieldFamilyEntry pc = prime_conductor_abelian(static_cast<std::size_t>(p), n);
            CHECK(cp.a == pc.a);
            CHECK(cp.h == pc.h);
        }
    }
}

TEST_CASE("conductor-65 quartic") {
    const FieldFamilyEntry e = example3_entry();
    CHECK(e.n == 4);
    CHECK(e.a == 49);
    CHECK(e.h == 16);
    CHECK(e.a - 3 * e.h == 1);
    CHECK(e.params().gram() == TameParams(4, 16).gram());
    CHECK(admissible_m_values(e) == ints({5, 7, 9, 11, 13, 15, 17}));
}

TEST_CASE("admissible m values") {
    const auto sextic = admissible_m_values(prime_conductor_abelian(6, 13));
    CHECK(std::find(sextic.begin(), sextic.end(), Integer(5)) != sextic.end());
    CHECK(std::find(sextic.begin(), sextic.end(), Integer(7)) != sextic.end());
    CHECK(admissible_m_values(conner_perlis(5, 11)) == ints({4, 6}));
    CHECK(admissible_m_values(TameParams(2, 0)).empty());
    CHECK_THROWS_AS(admissible_m_values(TameParams(4, 1), 4), PreconditionError);
}

TEST_CASE("every admissible m passes and the next excluded one fails the bounds") {
    for (const auto& entry : {conner_perlis(5, 11), prime_conductor_abelian(6, 13), example3_entry(),
                              conner_perlis(3, 13), prime_conductor_abelian(4, 13)}) {
        const TameParams p = entry.params();
        const Integer n = entry.n;
        const auto ms = admissible_m_values(entry);
        REQUIRE_FALSE(ms.empty());
        for (const auto& m : ms) {
            const Integer r = (m % n == 1) ? Integer(1) : Integer(-1);
            const VerificationReport report = verify_main_theorem(p, RSPair(p, r, (m - r) / n));
            CHECK(report.status == VerificationStatus::pass);
        }
        Integer next = ms.back() + 1;
        while (next % n != 1 && next % n != n - 1) {
            ++next;
        }
        const Integer r = (next % n == 1) ? Integer(1) : Integer(-1);
        CHECK_FALSE(check_main_bounds(p, RSPair(p, r, (next - r) / n)).holds);
    }
}

TEST_CASE("reference lattices") {
    CHECK(reference_gram(ReferenceLattice::root_a, 2).entries() == (IntMatrix{{2, -1}, {-1, 2}}));
    CHECK(reference_gram(ReferenceLattice::cubic, 5).entries() == IntMatrix::identity(5));
    const ShortVectorReport d4 = enumerate_short(reference_gram(ReferenceLattice::root_d, 4));
    CHECK(d4.lambda1 == 2);
    CHECK(d4.kissing_number == 24);
    for (std::size_t n = 2; n <= 8; ++n) {
        CHECK(abs(det_exact(d_lattice_basis(n))) == 2);
        for (std::size_t j = 0; j < n; ++j) {
            Integer sum = 0;
            for (const auto& c : d_lattice_basis(n).column(j)) sum += c;
            CHECK(sum % 2 == 0);
        }
    }
    CHECK(parse_reference_lattice("root-d") == ReferenceLattice::root_d);
    CHECK(parse_reference_lattice("Z") == ReferenceLattice::cubic);
    CHECK_THROWS_AS(parse_reference_lattice("E8"), PreconditionError);
    CHECK_THROWS_AS(d_lattice_basis(1), PreconditionError);
}

TEST_CASE("glue lattice") {
    const GramMatrix g = wr_not_swr_gram(5, 2);
    CHECK(g.entries() == (IntMatrix{{5, 2, 2, 2, 2}, {2, 4, 0, 0, 0}, {2, 0, 4, 0, 0}, {2, 0, 0, 4, 0}, {2, 0, 0, 0, 4}}));
    CHECK(volume_sq(g) == 256);  // index k over Z^N, form scaled by k^2: k^(2N) / k^2
    CHECK_THROWS_AS(wr_not_swr_gram(1, 2), PreconditionError);
}
