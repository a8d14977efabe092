#include <doctest.h>

#include <cmath>
#include <complex>
#include <random>

#include "cubres/characters.hpp"
#include "cubres/intmath.hpp"
#include "cubres/representations.hpp"

using namespace cubres;

namespace {

constexpr std::uint64_t kSeed = 0x5EED5EEDu;

bool close(std::complex<double> x, std::complex<double> y, double tol) {
    return std::abs(x - y) <= tol;
}

}  // namespace

TEST_CASE("character construction") {
    const auto eps = MultiplicativeCharacter::build(7, 1);
    CHECK(eps.is_trivial());
    for (std::int64_t t = 1; t <= 6; ++t) CHECK(close(eps.eval(t), {1.0, 0.0}, 1e-12));
    CHECK(close(eps.eval(7), {0.0, 0.0}, 0.0));  // chi(0) = 0 for every character

    const auto chi = MultiplicativeCharacter::build(7, 3);
    CHECK(chi.generator() == 3);  // least primitive root mod 7
    CHECK(chi.order() == 3);
    CHECK(chi.eval_cubic(3) == CubicValue::omega_power(1));  // chi(g) = omega
    CHECK(chi.eval_cubic(2) == CubicValue::omega_power(2));  // dlog_3(2) = 2
    CHECK(chi.eval_cubic(1) == CubicValue::one());
    CHECK(chi.eval_cubic(14) == CubicValue::zero());

    CHECK_THROWS_AS(MultiplicativeCharacter::build(5, 3), std::domain_error);
    CHECK_THROWS_AS(MultiplicativeCharacter::build(8, 1), std::domain_error);
    std::int64_t beyond_budget = kCharTableBudget + 1;
    while (!is_prime_u64(static_cast<std::uint64_t>(beyond_budget))) ++beyond_budget;
    CHECK_THROWS_AS(MultiplicativeCharacter::build(beyond_budget, 1), std::domain_error);
}

TEST_CASE("character homomorphism") {
    std::mt19937_64 rng(kSeed);
    for (std::int64_t p : {7, 13, 31, 61}) {
        for (std::int64_t order : {std::int64_t{2}, std::int64_t{3}, p - 1}) {
            if ((p - 1) % order != 0) continue;
            const auto chi = MultiplicativeCharacter::build(p, order);
            std::uniform_int_distribution<std::int64_t> d(1, p - 1);
            for (int i = 0; i < 200; ++i) {
                const std::int64_t a = d(rng), b = d(rng);
                CHECK(close(chi.eval(a * b % p), chi.eval(a) * chi.eval(b), 1e-9));
            }
            if (order == 3) {
                for (int i = 0; i < 200; ++i) {
                    const std::int64_t a = d(rng), b = d(rng);
                    CHECK(chi.eval_cubic(a * b % p) == chi.eval_cubic(a) * chi.eval_cubic(b));
                }
            }
            // chi(a^{-1}) = conj(chi(a))
            for (int i = 0; i < 50; ++i) {
                const std::int64_t a = d(rng);
                const std::int64_t ainv = static_cast<std::int64_t>(
                    pow_mod(static_cast<std::uint64_t>(a), static_cast<u128>(p - 2),
                            static_cast<std::uint64_t>(p)));
                CHECK(close(chi.eval(ainv), std::conj(chi.eval(a)), 1e-9));
            }
        }
    }
}

TEST_CASE("char_sum is p for the trivial character and 0 otherwise") {
    CHECK(char_sum(MultiplicativeCharacter::build(7, 1)) == 7);
    CHECK(char_sum(MultiplicativeCharacter::build(7, 3)) == 0);
    CHECK(char_sum(MultiplicativeCharacter::build(11, 2)) == 0);

    for (std::int64_t p : primes_up_to(200)) {
        for (std::int64_t d = 1; d <= p - 1; ++d) {
            if ((p - 1) % d != 0) continue;
            const auto chi = MultiplicativeCharacter::build(p, d);
            CHECK(char_sum(chi) == (d == 1 ? p : 0));
        }
    }

    // order-3 cross-check with exact Eisenstein accumulation
    for (std::int64_t p : {7, 13, 19, 31, 61}) {
        const auto chi = MultiplicativeCharacter::build(p, 3);
        EisensteinInt sum(0, 0);
        for (std::int64_t t = 1; t < p; ++t) sum = sum + chi.eval_cubic(t).to_eisenstein();
        CHECK(sum == EisensteinInt(0, 0));
    }
}

TEST_CASE("gauss sums") {
    const auto eps = MultiplicativeCharacter::build(7, 1);
    for (std::int64_t a = 1; a < 7; ++a) CHECK(std::abs(gauss_sum(eps, a)) <= 1e-9);

    for (std::int64_t p : {7, 13, 31}) {
        for (std::int64_t d = 2; d <= p - 1; ++d) {
            if ((p - 1) % d != 0) continue;
            const auto chi = MultiplicativeCharacter::build(p, d);
            CHECK(std::abs(std::norm(gauss_sum(chi, 1)) - static_cast<double>(p)) <=
                  kSquaredMagTol * static_cast<double>(p));
        }
    }

    // g_a(chi) = conj(chi(a)) g_1(chi)
    std::mt19937_64 rng(kSeed + 1);
    for (std::int64_t p : {7, 13, 61}) {
        const auto chi = MultiplicativeCharacter::build(p, 3);
        const auto g1 = gauss_sum(chi, 1);
        std::uniform_int_distribution<std::int64_t> d(1, p - 1);
        for (int i = 0; i < 20; ++i) {
            const std::int64_t a = d(rng);
            CHECK(close(gauss_sum(chi, a), std::conj(chi.eval(a)) * g1,
                        kComplexRelTol * std::sqrt(static_cast<double>(p))));
        }
    }
}

TEST_CASE("geometric zeta sums and the Kronecker delta") {
    CHECK(zeta_geometric_sum(0, 7) == 7);
    CHECK(zeta_geometric_sum(3, 7) == 0);
    CHECK(zeta_geometric_sum(14, 7) == 7);
    CHECK_THROWS_AS(zeta_geometric_sum(1, 6), std::domain_error);

    CHECK(kronecker_delta_check(2, 2, 7));
    CHECK(kronecker_delta_check(2, 5, 7));
    CHECK(kronecker_delta_check(9, 2, 7));
    for (std::int64_t x = 0; x < 11; ++x) {
        for (std::int64_t y = 0; y < 11; ++y) CHECK(kronecker_delta_check(x, y, 11));
    }
}

TEST_CASE("exact cubic Jacobi sums") {
    {
        const auto chi = MultiplicativeCharacter::build(7, 3);
        const EisensteinInt j = jacobi_sum_cubic(chi, chi);
        CHECK(norm(j) == 7);
    }
    {
        const auto chi = MultiplicativeCharacter::build(61, 3);
        const EisensteinInt j = jacobi_sum_cubic(chi, chi);
        CHECK(norm(j) == 61);
        CHECK(form_equivalent(NormFormRep{j.a, j.b}, NormFormRep{9, 5}));
    }
    {
        // chi * chi^2 is trivial: rejected
        const auto chi = MultiplicativeCharacter::build(7, 3);
        CHECK_THROWS_AS(jacobi_sum_cubic(chi, chi.power(2)), std::domain_error);
        CHECK_NOTHROW(jacobi_sum_cubic(chi.power(2), chi.power(2)));
    }
    {
        const auto chi7 = MultiplicativeCharacter::build(7, 3);
        const auto chi13 = MultiplicativeCharacter::build(13, 3);
        CHECK_THROWS_AS(jacobi_sum_cubic(chi7, chi13), std::domain_error);
        const auto quad = MultiplicativeCharacter::build(13, 2);
        CHECK_THROWS_AS(jacobi_sum_cubic(quad, quad), std::domain_error);
    }

    // exact norm p for split primes, both cubic characters
    for (std::int64_t p : primes_up_to(2000)) {
        if (p % 3 != 1) continue;
        const auto chi = MultiplicativeCharacter::build(p, 3);
        CHECK(norm(jacobi_sum_cubic(chi, chi)) == static_cast<NormValue>(p));
        CHECK(norm(jacobi_sum_cubic(chi.power(2), chi.power(2))) == static_cast<NormValue>(p));
    }
}

TEST_CASE("exact and numeric Jacobi sums agree") {
    for (std::int64_t p : {7, 13, 31, 61, 97}) {
        const auto chi = MultiplicativeCharacter::build(p, 3);
        const EisensteinInt j = jacobi_sum_cubic(chi, chi);
        const std::complex<double> numeric =
            gauss_sum(chi, 1) * gauss_sum(chi, 1) / gauss_sum(compose(chi, chi), 1);
        CHECK(close(to_complex(j), numeric, kComplexRelTol * std::sqrt(static_cast<double>(p))));
    }
}

TEST_CASE("Jacobi-Gauss relation check") {
    CHECK(jacobi_gauss_relation_check(MultiplicativeCharacter::build(7, 3),
                                      MultiplicativeCharacter::build(7, 3)));
    CHECK(jacobi_gauss_relation_check(MultiplicativeCharacter::build(13, 3),
                                      MultiplicativeCharacter::build(13, 3)));
    {
        const auto chi = MultiplicativeCharacter::build(7, 3);
        const auto eps = MultiplicativeCharacter::build(7, 1);
        CHECK_THROWS_AS(jacobi_gauss_relation_check(chi, eps), std::domain_error);
        CHECK_THROWS_AS(jacobi_gauss_relation_check(chi, chi.power(2)), std::domain_error);
    }
    {
        // mixed orders with nontrivial composition
        const auto chi = MultiplicativeCharacter::build(13, 3);
        const auto lam = MultiplicativeCharacter::build(13, 4);
        CHECK(jacobi_gauss_relation_check(chi, lam));
    }
}
