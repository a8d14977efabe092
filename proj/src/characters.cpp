#include "cubres/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>
#include <ostream>
#include <stdexcept>

namespace cubres {

std::int64_t least_primitive_root(std::int64_t p) {
    if (p == 2) return 1;
    const auto factors = factorize(static_cast<std::uint64_t>(p - 1));
    for (std::int64_t g = 2; g < p; ++g) {
        bool primitive = true;
        for (const auto& [q, e] : factors) {
            if (pow_mod(static_cast<std::uint64_t>(g), static_cast<u128>((p - 1) / static_cast<std::int64_t>(q)),
                        static_cast<std::uint64_t>(p)) == 1) {
                primitive = false;
                break;
            }
        }
        if (primitive) return g;
    }
    throw std::logic_error("least_primitive_root: none found");
}

MultiplicativeCharacter MultiplicativeCharacter::build(std::int64_t p, std::int64_t order) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw std::domain_error("build_character: p must be prime");
    }
    if (p > kCharTableBudget) {
        throw std::domain_error("build_character: p exceeds the table budget");
    }
    if (order < 1 || (p - 1) % order != 0) {
        throw std::domain_error("build_character: order must divide p-1");
    }
    std::int64_t g = least_primitive_root(p);
    auto table = std::make_shared<std::vector<std::uint32_t>>(static_cast<std::size_t>(p), 0u);
    std::int64_t val = 1;
    for (std::int64_t j = 0; j < p - 1; ++j) {
        (*table)[static_cast<std::size_t>(val)] = static_cast<std::uint32_t>(j);
        val = static_cast<std::int64_t>(mul_mod(static_cast<std::uint64_t>(val), static_cast<std::uint64_t>(g),
                                                static_cast<std::uint64_t>(p)));
    }
    return MultiplicativeCharacter(p, (p - 1) / order, g, std::move(table));
}

std::int64_t MultiplicativeCharacter::order() const {
    if (p_ == 2) return 1;
    return (p_ - 1) / std::gcd(k_, p_ - 1);
}

std::int64_t MultiplicativeCharacter::dlog(std::int64_t t) const {
    t %= p_;
    if (t < 0) t += p_;
    if (t == 0) throw std::domain_error("dlog: t divisible by p");
    return static_cast<std::int64_t>((*dlog_)[static_cast<std::size_t>(t)]);
}

std::complex<double> MultiplicativeCharacter::eval(std::int64_t t) const {
    t %= p_;
    if (t < 0) t += p_;
    if (t == 0) return {0.0, 0.0};
    if (p_ == 2) return {1.0, 0.0};
    const std::int64_t m = static_cast<std::int64_t>(
        static_cast<i128>(k_) * dlog(t) % (p_ - 1));
    return std::polar(1.0, 2.0 * std::numbers::pi * static_cast<double>(m) / static_cast<double>(p_ - 1));
}

CubicValue MultiplicativeCharacter::eval_cubic(std::int64_t t) const {
    if (order() != 3) throw std::domain_error("eval_cubic: character order is not 3");
    t %= p_;
    if (t < 0) t += p_;
    if (t == 0) return CubicValue::zero();
    const std::int64_t step = (p_ - 1) / 3;
    const std::int64_t m = static_cast<std::int64_t>(static_cast<i128>(k_) * dlog(t) % (p_ - 1));
    return CubicValue::omega_power(static_cast<int>(m / step));
}

MultiplicativeCharacter MultiplicativeCharacter::power(std::int64_t e) const {
    std::int64_t n = p_ - 1;
    if (n == 0) n = 1;
    std::int64_t k = static_cast<std::int64_t>((static_cast<i128>(k_) * (e % n) % n + n) % n);
    return MultiplicativeCharacter(p_, k, generator_, dlog_);
}

MultiplicativeCharacter compose(const MultiplicativeCharacter& x, const MultiplicativeCharacter& y) {
    if (x.p_ != y.p_) throw std::domain_error("compose: characters live on different primes");
    std::int64_t n = x.p_ - 1;
    if (n == 0) n = 1;
    return MultiplicativeCharacter(x.p_, (x.k_ + y.k_) % n, x.generator_, x.dlog_);
}

std::int64_t char_sum(const MultiplicativeCharacter& chi) {
    const std::int64_t p = chi.p();
    if (chi.is_trivial()) return p;
    const std::int64_t d = chi.order();
    const std::int64_t step = (p - 1) / d;
    std::vector<std::int64_t> counts(static_cast<std::size_t>(d), 0);
    for (std::int64_t t = 1; t < p; ++t) {
        const std::int64_t m =
            static_cast<std::int64_t>(static_cast<i128>(chi.exponent()) * chi.dlog(t) % (p - 1));
        counts[static_cast<std::size_t>(m / step)]++;
    }
    for (std::int64_t c : counts) {
        if (c != (p - 1) / d) throw std::logic_error("char_sum: exponent classes are not uniform");
    }
    // uniform counts times the vanishing sum of d-th roots of unity
    return 0;
}

std::complex<double> gauss_sum(const MultiplicativeCharacter& chi, std::int64_t a) {
    const std::int64_t p = chi.p();
    if (p > kNumericBudget) throw std::domain_error("gauss_sum: p exceeds the numeric budget");
    a %= p;
    if (a < 0) a += p;
    // the trivial character keeps its t = 0 term, so g_a(ε) is the plain
    // geometric sum: p when a ≡ 0 and 0 otherwise
    std::complex<double> sum = chi.is_trivial() ? std::complex<double>(1.0, 0.0)
                                                : std::complex<double>(0.0, 0.0);
    const double tau = 2.0 * std::numbers::pi;
    for (std::int64_t t = 1; t < p; ++t) {
        const std::int64_t at = static_cast<std::int64_t>(
            mul_mod(static_cast<std::uint64_t>(a), static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(p)));
        sum += chi.eval(t) * std::polar(1.0, tau * static_cast<double>(at) / static_cast<double>(p));
    }
    return sum;
}

std::int64_t zeta_geometric_sum(std::int64_t a, std::int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw std::domain_error("zeta_geometric_sum: p must be prime");
    }
    std::int64_t r = a % p;
    if (r < 0) r += p;
    const std::int64_t exact = (r == 0) ? p : 0;
    if (p <= kNumericBudget) {
        std::complex<double> sum(0.0, 0.0);
        const double tau = 2.0 * std::numbers::pi;
        for (std::int64_t t = 0; t < p; ++t) {
            const std::int64_t rt = static_cast<std::int64_t>(
                mul_mod(static_cast<std::uint64_t>(r), static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(p)));
            sum += std::polar(1.0, tau * static_cast<double>(rt) / static_cast<double>(p));
        }
        if (std::abs(sum - std::complex<double>(static_cast<double>(exact), 0.0)) >
            kSquaredMagTol * static_cast<double>(p)) {
            throw std::logic_error("zeta_geometric_sum: numeric cross-check failed");
        }
    }
    return exact;
}

bool kronecker_delta_check(std::int64_t x, std::int64_t y, std::int64_t p) {
    if (p < 2 || !is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw std::domain_error("kronecker_delta_check: p must be prime");
    }
    if (p > kNumericBudget) throw std::domain_error("kronecker_delta_check: p exceeds the numeric budget");
    std::int64_t diff = (x - y) % p;
    if (diff < 0) diff += p;
    std::complex<double> sum(0.0, 0.0);
    const double tau = 2.0 * std::numbers::pi;
    for (std::int64_t t = 0; t < p; ++t) {
        const std::int64_t dt = static_cast<std::int64_t>(mul_mod(
            static_cast<std::uint64_t>(diff), static_cast<std::uint64_t>(t), static_cast<std::uint64_t>(p)));
        sum += std::polar(1.0, tau * static_cast<double>(dt) / static_cast<double>(p));
    }
    sum /= static_cast<double>(p);
    const double delta = (diff == 0) ? 1.0 : 0.0;
    return std::abs(sum - std::complex<double>(delta, 0.0)) <= kSquaredMagTol;
}

namespace {

void require_cubic_pair(const MultiplicativeCharacter& chi, const MultiplicativeCharacter& lambda) {
    if (chi.p() != lambda.p()) throw std::domain_error("jacobi sum: characters live on different primes");
    if (chi.order() != 3 || lambda.order() != 3) {
        throw std::domain_error("jacobi sum: both characters must have order 3");
    }
    if ((chi.exponent() + lambda.exponent()) % (chi.p() - 1) == 0) {
        throw std::domain_error("jacobi sum: composition of the characters is trivial");
    }
}

}  // namespace

EisensteinInt jacobi_sum_cubic(const MultiplicativeCharacter& chi, const MultiplicativeCharacter& lambda) {
    require_cubic_pair(chi, lambda);
    const std::int64_t p = chi.p();
    // chi(0) = lambda(0) = 0 drops the a = 0 and a = 1 terms
    std::int64_t cnt[3] = {0, 0, 0};
    for (std::int64_t a = 2; a < p; ++a) {
        const CubicValue v = chi.eval_cubic(a) * lambda.eval_cubic(1 - a + p);
        cnt[v.power()]++;
    }
    // cnt0 + cnt1*omega + cnt2*omega^2 with omega^2 = -1-omega
    return EisensteinInt(cnt[0] - cnt[2], cnt[1] - cnt[2]);
}

std::complex<double> jacobi_sum_numeric(const MultiplicativeCharacter& chi,
                                        const MultiplicativeCharacter& lambda) {
    if (chi.p() != lambda.p()) throw std::domain_error("jacobi sum: characters live on different primes");
    const std::int64_t p = chi.p();
    if (p > kNumericBudget) throw std::domain_error("jacobi_sum_numeric: p exceeds the numeric budget");
    std::complex<double> sum(0.0, 0.0);
    for (std::int64_t a = 2; a < p; ++a) {
        sum += chi.eval(a) * lambda.eval(1 - a + p);
    }
    return sum;
}

bool jacobi_gauss_relation_check(const MultiplicativeCharacter& chi,
                                 const MultiplicativeCharacter& lambda) {
    if (chi.p() != lambda.p()) throw std::domain_error("relation check: characters live on different primes");
    if (chi.is_trivial() || lambda.is_trivial()) {
        throw std::domain_error("relation check: trivial character");
    }
    const MultiplicativeCharacter comp = compose(chi, lambda);
    if (comp.is_trivial()) throw std::domain_error("relation check: trivial composition");
    const double p = static_cast<double>(chi.p());
    const std::complex<double> j = jacobi_sum_numeric(chi, lambda);
    const std::complex<double> ratio = gauss_sum(chi, 1) * gauss_sum(lambda, 1) / gauss_sum(comp, 1);
    const double scale = std::sqrt(p);
    if (std::abs(j - ratio) > kComplexRelTol * scale) return false;
    return std::abs(std::abs(j) - scale) <= kComplexRelTol * scale;
}

}  // namespace cubres
