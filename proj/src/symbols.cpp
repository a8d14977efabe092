#include "cubres/symbols.hpp"

#include <stdexcept>

namespace cubres {

EisensteinInt eis_pow_mod(const EisensteinInt& base, u128 exp, const EisensteinInt& modulus) {
    detail::ModReducer ctx(modulus);  // rejects a zero modulus
    EisensteinInt result = ctx.reduce_wide(1, 0);
    EisensteinInt acc = ctx.reduce_wide(base.a, base.b);
    while (exp > 0) {
        if (exp & 1) result = ctx.mul(result, acc);
        acc = ctx.mul(acc, acc);
        exp >>= 1;
    }
    return mod_reduce(result, modulus);
}

CubicValue cubic_symbol(const EisensteinInt& alpha, const EisensteinInt& pi) {
    const NormValue n = norm(pi);
    if (n == 0) throw std::domain_error("cubic_symbol: zero modulus");
    if (n == 1) throw std::domain_error("cubic_symbol: unit modulus");
    if (n == 3) throw std::domain_error("cubic_symbol: modulus of norm 3");
    if (n % 3 != 1) throw std::domain_error("cubic_symbol: modulus norm is not 1 mod 3");
    if (mod_reduce(alpha, pi).is_zero()) return CubicValue::zero();
    const EisensteinInt residue = eis_pow_mod(alpha, (n - 1) / 3, pi);
    for (int k = 0; k < 3; ++k) {
        if (congruent(residue, CubicValue::omega_power(k).to_eisenstein(), pi)) {
            return CubicValue::omega_power(k);
        }
    }
    throw std::domain_error("cubic_symbol: residue matches no cube root of unity; modulus is not prime");
}

bool cubic_symbol_multiplicativity_check(const EisensteinInt& alpha, const EisensteinInt& beta,
                                         const EisensteinInt& pi) {
    const EisensteinInt a = mod_reduce(alpha, pi);
    const EisensteinInt b = mod_reduce(beta, pi);
    return cubic_symbol(a * b, pi) == cubic_symbol(a, pi) * cubic_symbol(b, pi);
}

bool cubic_reciprocity_check(const EisensteinInt& pi1, const EisensteinInt& pi2) {
    if (!is_prime(pi1) || !is_prime(pi2)) {
        throw std::domain_error("cubic_reciprocity_check: arguments must be prime");
    }
    if (!is_primary(pi1) || !is_primary(pi2)) {
        throw std::domain_error("cubic_reciprocity_check: arguments must be primary");
    }
    if (norm(pi1) == 3 || norm(pi2) == 3) {
        throw std::domain_error("cubic_reciprocity_check: norm 3 is excluded");
    }
    if (norm(pi1) == norm(pi2)) {
        throw std::domain_error("cubic_reciprocity_check: norms must be distinct");
    }
    return cubic_symbol(pi1, pi2) == cubic_symbol(pi2, pi1);
}

namespace {

void require_odd_prime(std::int64_t p, const char* who) {
    if (p < 3 || p % 2 == 0 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw std::domain_error(std::string(who) + ": p must be an odd prime");
    }
}

}  // namespace

int legendre(std::int64_t a, std::int64_t p) {
    require_odd_prime(p, "legendre");
    std::int64_t r = a % p;
    if (r < 0) r += p;
    if (r == 0) return 0;
    const std::uint64_t e = pow_mod(static_cast<std::uint64_t>(r), static_cast<u128>((p - 1) / 2),
                                    static_cast<std::uint64_t>(p));
    if (e == 1) return 1;
    if (e == static_cast<std::uint64_t>(p - 1)) return -1;
    throw std::logic_error("legendre: Euler criterion failed (modulus not prime?)");
}

int quad_char_of_2(std::int64_t p) {
    require_odd_prime(p, "quad_char_of_2");
    const int r = static_cast<int>(p % 8);
    return (r == 1 || r == 7) ? 1 : -1;
}

QuadCase gauss_four_case(std::int64_t p) {
    require_odd_prime(p, "gauss_four_case");
    const int r = static_cast<int>(p % 8);
    switch (r) {
        case 1: return {1, +1, +1};
        case 3: return {3, -1, +1};
        case 5: return {5, -1, -1};
        default: return {7, +1, -1};
    }
}

}  // namespace cubres
