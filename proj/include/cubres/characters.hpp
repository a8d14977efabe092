#pragma once

#include <complex>
#include <cstdint>
#include <memory>
#include <vector>

#include "cubres/cubic_value.hpp"
#include "cubres/eisenstein.hpp"
#include "cubres/intmath.hpp"

namespace cubres {

/// Largest prime for which a discrete-log table is built.
inline constexpr std::int64_t kCharTableBudget = std::int64_t{1} << 20;
/// Largest prime accepted by the numeric (complex double) sums.
inline constexpr std::int64_t kNumericBudget = std::int64_t{1} << 20;

/// Absolute tolerance for squared magnitudes, scaled by p.
inline constexpr double kSquaredMagTol = 1e-8;
/// Relative tolerance for complex equality.
inline constexpr double kComplexRelTol = 1e-6;

std::int64_t least_primitive_root(std::int64_t p);

/// Character on F_p^x determined by the least primitive root g and an
/// exponent multiplier k: chi(g^j) = zeta_{p-1}^{k*j}. chi(0) = 0 for every
/// character, including the trivial one.
class MultiplicativeCharacter {
public:
    /// Character of exact multiplicative order `order` (which must divide
    /// p - 1), with chi(g) = zeta_order. order = 1 gives the trivial
    /// character.
    static MultiplicativeCharacter build(std::int64_t p, std::int64_t order);

    std::int64_t p() const { return p_; }
    std::int64_t generator() const { return generator_; }
    std::int64_t exponent() const { return k_; }
    std::int64_t order() const;
    bool is_trivial() const { return order() == 1; }

    /// Discrete log of t (reduced mod p, t not divisible by p).
    std::int64_t dlog(std::int64_t t) const;

    /// Numeric value; exactly 0 for t ≡ 0 (mod p).
    std::complex<double> eval(std::int64_t t) const;

    /// Exact value for cubic characters (order 3 required).
    CubicValue eval_cubic(std::int64_t t) const;

    MultiplicativeCharacter power(std::int64_t e) const;
    friend MultiplicativeCharacter compose(const MultiplicativeCharacter& x,
                                           const MultiplicativeCharacter& y);

private:
    MultiplicativeCharacter(std::int64_t p, std::int64_t k, std::int64_t g,
                            std::shared_ptr<const std::vector<std::uint32_t>> dlog)
        : p_(p), k_(k), generator_(g), dlog_(std::move(dlog)) {}

    std::int64_t p_;
    std::int64_t k_;
    std::int64_t generator_;
    std::shared_ptr<const std::vector<std::uint32_t>> dlog_;
};

/// Exact sum of chi(t) over t in F_p: p for the trivial character, else 0
/// (established symbolically from the uniform exponent counts).
std::int64_t char_sum(const MultiplicativeCharacter& chi);

/// g_a(chi) = sum over t of chi(t) * zeta_p^{a t}.
std::complex<double> gauss_sum(const MultiplicativeCharacter& chi, std::int64_t a);

/// p if a ≡ 0 (mod p), else 0; cross-checked numerically for p within the
/// numeric budget.
std::int64_t zeta_geometric_sum(std::int64_t a, std::int64_t p);

/// True iff p^{-1} * sum_t zeta_p^{t(x-y)} matches the Kronecker delta.
bool kronecker_delta_check(std::int64_t x, std::int64_t y, std::int64_t p);

/// Exact Jacobi sum in Z[omega] for two cubic characters on the same p with
/// nontrivial composition.
EisensteinInt jacobi_sum_cubic(const MultiplicativeCharacter& chi,
                               const MultiplicativeCharacter& lambda);

std::complex<double> jacobi_sum_numeric(const MultiplicativeCharacter& chi,
                                        const MultiplicativeCharacter& lambda);

/// True iff J(chi, lambda) = g(chi) g(lambda) / g(chi lambda) within the
/// relative tolerance and |J| = sqrt(p) within the same tolerance. Requires
/// chi, lambda and their composition nontrivial.
bool jacobi_gauss_relation_check(const MultiplicativeCharacter& chi,
                                 const MultiplicativeCharacter& lambda);

}  // namespace cubres
