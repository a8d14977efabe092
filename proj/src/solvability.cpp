#include "cubres/solvability.hpp"

#include <stdexcept>

#include "cubres/intmath.hpp"
#include "cubres/representations.hpp"
#include "cubres/symbols.hpp"

namespace cubres {

std::optional<std::int64_t> cubic2_oracle(std::int64_t n) {
    if (n < 2) throw std::domain_error("cubic2_oracle: modulus must be at least 2");
    const std::uint64_t m = static_cast<std::uint64_t>(n);
    const std::uint64_t target = 2 % m;
    for (std::uint64_t x = 0; x < m; ++x) {
        if (mul_mod(mul_mod(x, x, m), x, m) == target) {
            return static_cast<std::int64_t>(x);
        }
    }
    return std::nullopt;
}

namespace {

void require_split_prime(std::int64_t p, const char* who) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw std::domain_error(std::string(who) + ": p must be prime");
    }
    if (p % 3 != 1) {
        throw std::domain_error(std::string(who) + ": p must be ≡ 1 (mod 3)");
    }
}

}  // namespace

bool cubic2_by_representation(std::int64_t p) {
    require_split_prime(p, "cubic2_by_representation");
    return solve_p_27(p).has_value();
}

bool cubic2_by_symbol(std::int64_t p) {
    require_split_prime(p, "cubic2_by_symbol");
    const EisensteinInt pi = split_rational_prime(p).first;
    return cubic_symbol(EisensteinInt(2, 0), pi) == CubicValue::one();
}

Cubic2Verdict cubic2_full(std::int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw std::domain_error("cubic2_full: p must be prime");
    }
    Cubic2Verdict v;
    v.p = p;
    v.root = cubic2_oracle(p);
    v.by_oracle = v.root.has_value();
    if (p == 3) {
        // only the oracle route applies; x = 2 works since x^3 ≡ x (mod 3)
        v.by_representation = v.by_oracle;
        v.by_symbol = v.by_oracle;
    } else if (p % 3 == 2) {
        // every integer is a cube modulo an inert prime
        v.by_representation = true;
        v.by_symbol = (p == 2) ? v.by_oracle
                               : cubic_symbol(EisensteinInt(2, 0), EisensteinInt(p, 0)) == CubicValue::one();
        if (!v.by_oracle) throw std::logic_error("cubic2_full: oracle found no root for an inert prime");
    } else {
        v.by_representation = cubic2_by_representation(p);
        v.by_symbol = cubic2_by_symbol(p);
    }
    return v;
}

bool inert_cube_bijection_check(std::int64_t q) {
    if (q < 2 || !is_prime_u64(static_cast<std::uint64_t>(q))) {
        throw std::domain_error("inert_cube_bijection_check: q must be prime");
    }
    if (q % 3 != 2) throw std::domain_error("inert_cube_bijection_check: q must be ≡ 2 (mod 3)");
    std::vector<bool> hit(static_cast<std::size_t>(q), false);
    std::size_t count = 0;
    const std::uint64_t m = static_cast<std::uint64_t>(q);
    for (std::uint64_t t = 0; t < m; ++t) {
        const std::uint64_t c = mul_mod(mul_mod(t, t, m), t, m);
        if (!hit[static_cast<std::size_t>(c)]) {
            hit[static_cast<std::size_t>(c)] = true;
            ++count;
        }
    }
    return count == static_cast<std::size_t>(q);
}

bool lemma14_check(const EisensteinInt& pi) {
    if (!is_prime(pi)) throw std::domain_error("lemma14_check: pi must be prime");
    if (!is_primary(pi)) throw std::domain_error("lemma14_check: pi must be primary");
    if (norm(pi) == 3) throw std::domain_error("lemma14_check: norm 3 is excluded");
    if (divides(pi, EisensteinInt(2, 0))) {
        throw std::domain_error("lemma14_check: pi divides 2, the symbol degenerates to zero");
    }
    const bool symbol_one = cubic_symbol(EisensteinInt(2, 0), pi) == CubicValue::one();
    const bool odd_even = (pi.a % 2 != 0) && (pi.b % 2 == 0);
    return symbol_one == odd_even;
}

bool flt_analogue_check(const EisensteinInt& alpha, const EisensteinInt& pi) {
    if (!is_prime(pi)) throw std::domain_error("flt_analogue_check: pi must be prime");
    if (divides(pi, alpha)) throw std::domain_error("flt_analogue_check: pi divides alpha");
    const EisensteinInt r = eis_pow_mod(alpha, norm(pi) - 1, pi);
    return congruent(r, EisensteinInt(1, 0), pi);
}

bool quad2_cross_check(std::int64_t p) {
    const QuadCase expected = gauss_four_case(p);  // validates p
    const std::uint64_t m = static_cast<std::uint64_t>(p);
    bool plus2 = false, minus2 = false;
    for (std::uint64_t x = 1; x < m; ++x) {
        const std::uint64_t s = mul_mod(x, x, m);
        if (s == 2 % m) plus2 = true;
        if (s == (m - 2) % m) minus2 = true;
        if (plus2 && minus2) break;
    }
    const int bp = plus2 ? 1 : -1;
    const int bm = minus2 ? 1 : -1;
    return bp == expected.plus2 && bm == expected.minus2 && bp == quad_char_of_2(p);
}

std::vector<std::int64_t> cube_table(std::int64_t n) {
    if (n < 1) throw std::domain_error("cube_table: modulus must be positive");
    std::vector<std::int64_t> out;
    out.reserve(static_cast<std::size_t>(n));
    const std::uint64_t m = static_cast<std::uint64_t>(n);
    for (std::uint64_t t = 0; t < m; ++t) {
        out.push_back(static_cast<std::int64_t>(mul_mod(mul_mod(t, t, m), t, m)));
    }
    return out;
}

}  // namespace cubres
