#pragma once

#include <array>
#include <complex>
#include <cstdint>
#include <iosfwd>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "cubres/intmath.hpp"

namespace cubres {

/// Coordinate bound: every intermediate of multiplication and Euclidean
/// division (three coordinate products plus the doubled rounding numerators)
/// stays inside __int128 as long as both coordinates are within this bound.
inline constexpr std::int64_t kCoordBound = std::int64_t{1} << 60;

/// a + b*omega with omega = (-1 + i*sqrt(3))/2, so omega^2 = -1 - omega.
/// Coordinates are canonical: two values are equal iff both coordinates are.
/// Arithmetic that would leave the coordinate range throws std::overflow_error
/// instead of wrapping.
struct EisensteinInt {
    std::int64_t a = 0;  ///< coefficient of 1
    std::int64_t b = 0;  ///< coefficient of omega

    EisensteinInt() = default;
    EisensteinInt(std::int64_t a_, std::int64_t b_);

    bool is_zero() const { return a == 0 && b == 0; }
    friend bool operator==(const EisensteinInt&, const EisensteinInt&) = default;
};

using NormValue = u128;

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y);
EisensteinInt operator-(const EisensteinInt& x);
EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y);

/// conj(a + b*omega) = (a - b) - b*omega.
EisensteinInt conj(const EisensteinInt& x);

/// N(a + b*omega) = a^2 - a*b + b^2; zero iff x is zero, multiplicative.
NormValue norm(const EisensteinInt& x);

/// The six units: 1, -1, omega, -omega, omega^2, -omega^2 (in coordinates).
const std::array<EisensteinInt, 6>& units();

/// The six unit multiples of x (distinct for x != 0). Throws on zero input.
std::vector<EisensteinInt> associates(const EisensteinInt& x);

/// The unit u and y = u*x with y ≡ 2 (mod 3), i.e. y.a ≡ 2 and y.b ≡ 0 mod 3.
/// Throws if x is zero or divisible by 1 - omega (norm divisible by 3).
std::pair<EisensteinInt, EisensteinInt> primary_associate(const EisensteinInt& x);

bool is_primary(const EisensteinInt& x);

struct DivModResult {
    EisensteinInt q;
    EisensteinInt r;
};

/// x = q*y + r with norm(r) < norm(y). q rounds each rational coordinate of
/// x*conj(y)/norm(y) to the nearest integer, halves away from zero.
DivModResult divmod(const EisensteinInt& x, const EisensteinInt& y);

/// Remainder of divmod(x, m); idempotent.
EisensteinInt mod_reduce(const EisensteinInt& x, const EisensteinInt& m);

bool divides(const EisensteinInt& d, const EisensteinInt& n);
bool congruent(const EisensteinInt& x, const EisensteinInt& y, const EisensteinInt& m);

/// Euclidean gcd, canonically normalized: (1,0) for unit gcds, the primary
/// associate when the norm is coprime to 3, otherwise the associate with
/// a > 0 and smallest |b| (preferring b >= 0, then smaller a).
EisensteinInt gcd(EisensteinInt x, EisensteinInt y);

/// Primality in Z[omega]: prime norm (rational-prime norm implies prime), or
/// an associate of an inert rational prime q ≡ 2 (mod 3).
bool is_prime(const EisensteinInt& x);

enum class PrimeClassification { ramified, inert, split };

/// ramified for p = 3, inert for p ≡ 2 (mod 3), split for p ≡ 1 (mod 3).
/// Rejects composites and p < 2.
PrimeClassification classify_rational_prime(std::int64_t p);

std::string to_string(PrimeClassification c);

/// "a+bω" with explicit signs: "2", "-4-3ω", "ω", "0".
std::string to_string(const EisensteinInt& x);

/// Accepts "a,b" or a bare integer "n" meaning (n, 0).
EisensteinInt parse_eisenstein(std::string_view text);

std::complex<double> to_complex(const EisensteinInt& x);

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x);

namespace detail {

/// Repeated reduction against a fixed modulus; accepts intermediate
/// coordinates beyond the public bound (products of two residues).
class ModReducer {
public:
    explicit ModReducer(const EisensteinInt& m);

    EisensteinInt reduce_wide(i128 ra, i128 rb) const;
    EisensteinInt mul(const EisensteinInt& x, const EisensteinInt& y) const;

private:
    bool rational_ = false;  // some associate of the modulus is (q, 0)
    i128 q_ = 0;             // that q > 0, when rational_
    i128 ca_ = 0, cb_ = 0;   // conj(m) coordinates, when !rational_
    i128 d_ = 0;             // norm(m), when !rational_
};

}  // namespace detail

}  // namespace cubres
