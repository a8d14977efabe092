#include "cubres/eisenstein.hpp"

#include <algorithm>
#include <cmath>
#include <cstdlib>
#include <ostream>
#include <stdexcept>

namespace cubres {

namespace {

void check_coord(i128 v) {
    if (v > kCoordBound || v < -kCoordBound) {
        throw std::overflow_error("EisensteinInt: coordinate out of range");
    }
}

EisensteinInt make_checked(i128 a, i128 b) {
    check_coord(a);
    check_coord(b);
    return EisensteinInt(static_cast<std::int64_t>(a), static_cast<std::int64_t>(b));
}

/// round(n / d) with d > 0, halves away from zero.
i128 round_div(i128 n, i128 d) {
    i128 q = n / d;
    i128 rem = n - q * d;
    if (rem < 0) rem = -rem;
    if (2 * rem >= d) q += (n < 0) ? -1 : 1;
    return q;
}

int mod3(std::int64_t v) {
    int r = static_cast<int>(v % 3);
    return r < 0 ? r + 3 : r;
}

}  // namespace

EisensteinInt::EisensteinInt(std::int64_t a_, std::int64_t b_) : a(a_), b(b_) {
    check_coord(a_);
    check_coord(b_);
}

EisensteinInt operator+(const EisensteinInt& x, const EisensteinInt& y) {
    return make_checked(static_cast<i128>(x.a) + y.a, static_cast<i128>(x.b) + y.b);
}

EisensteinInt operator-(const EisensteinInt& x, const EisensteinInt& y) {
    return make_checked(static_cast<i128>(x.a) - y.a, static_cast<i128>(x.b) - y.b);
}

EisensteinInt operator-(const EisensteinInt& x) {
    return make_checked(-static_cast<i128>(x.a), -static_cast<i128>(x.b));
}

EisensteinInt operator*(const EisensteinInt& x, const EisensteinInt& y) {
    const i128 xa = x.a, xb = x.b, ya = y.a, yb = y.b;
    // (a+bω)(c+dω) = ac + (ad+bc)ω + bdω², ω² = -1-ω
    return make_checked(xa * ya - xb * yb, xa * yb + xb * ya - xb * yb);
}

EisensteinInt conj(const EisensteinInt& x) {
    return make_checked(static_cast<i128>(x.a) - x.b, -static_cast<i128>(x.b));
}

NormValue norm(const EisensteinInt& x) {
    const i128 a = x.a, b = x.b;
    return static_cast<NormValue>(a * a - a * b + b * b);
}

const std::array<EisensteinInt, 6>& units() {
    static const std::array<EisensteinInt, 6> u = {
        EisensteinInt(1, 0),  EisensteinInt(-1, 0),  // ±1
        EisensteinInt(0, 1),  EisensteinInt(0, -1),  // ±ω
        EisensteinInt(-1, -1), EisensteinInt(1, 1),  // ±ω²
    };
    return u;
}

std::vector<EisensteinInt> associates(const EisensteinInt& x) {
    if (x.is_zero()) throw std::domain_error("associates: zero input");
    std::vector<EisensteinInt> out;
    out.reserve(6);
    for (const auto& u : units()) {
        EisensteinInt y = u * x;
        if (std::find(out.begin(), out.end(), y) == out.end()) out.push_back(y);
    }
    return out;
}

bool is_primary(const EisensteinInt& x) {
    return mod3(x.a) == 2 && mod3(x.b) == 0;
}

std::pair<EisensteinInt, EisensteinInt> primary_associate(const EisensteinInt& x) {
    if (x.is_zero()) throw std::domain_error("primary_associate: zero input");
    if (norm(x) % 3 == 0) {
        throw std::domain_error("primary_associate: input divisible by 1-omega, no primary associate");
    }
    const EisensteinInt* found_unit = nullptr;
    EisensteinInt found;
    for (const auto& u : units()) {
        EisensteinInt y = u * x;
        if (is_primary(y)) {
            if (found_unit != nullptr) throw std::logic_error("primary_associate: not unique");
            found_unit = &u;
            found = y;
        }
    }
    if (found_unit == nullptr) throw std::logic_error("primary_associate: none found");
    return {*found_unit, found};
}

DivModResult divmod(const EisensteinInt& x, const EisensteinInt& y) {
    if (y.is_zero()) throw std::domain_error("divmod: division by zero");
    const i128 xa = x.a, xb = x.b;
    const i128 ca = static_cast<i128>(y.a) - y.b, cb = -static_cast<i128>(y.b);
    const i128 na = xa * ca - xb * cb;
    const i128 nb = xa * cb + xb * ca - xb * cb;
    const i128 d = static_cast<i128>(norm(y));
    EisensteinInt q = make_checked(round_div(na, d), round_div(nb, d));
    EisensteinInt r = x - q * y;
    if (norm(r) >= norm(y)) throw std::logic_error("divmod: remainder norm bound violated");
    return {q, r};
}

EisensteinInt mod_reduce(const EisensteinInt& x, const EisensteinInt& m) {
    return divmod(x, m).r;
}

bool divides(const EisensteinInt& d, const EisensteinInt& n) {
    if (d.is_zero()) return n.is_zero();
    return mod_reduce(n, d).is_zero();
}

bool congruent(const EisensteinInt& x, const EisensteinInt& y, const EisensteinInt& m) {
    return divides(m, x - y);
}

namespace {

EisensteinInt normalize_gcd(const EisensteinInt& x) {
    NormValue n = norm(x);
    if (n == 1) return EisensteinInt(1, 0);
    if (n % 3 != 0) return primary_associate(x).second;
    const EisensteinInt* best = nullptr;
    std::vector<EisensteinInt> all = associates(x);
    auto key = [](const EisensteinInt& e) {
        return std::make_tuple(e.b < 0 ? -e.b : e.b, e.b < 0, e.a);
    };
    for (const auto& cand : all) {
        if (cand.a <= 0) continue;
        if (best == nullptr || key(cand) < key(*best)) best = &cand;
    }
    if (best == nullptr) throw std::logic_error("normalize_gcd: no positive-a associate");
    return *best;
}

}  // namespace

EisensteinInt gcd(EisensteinInt x, EisensteinInt y) {
    if (x.is_zero() && y.is_zero()) throw std::domain_error("gcd: both inputs zero");
    while (!y.is_zero()) {
        EisensteinInt r = divmod(x, y).r;
        x = y;
        y = r;
    }
    return normalize_gcd(x);
}

bool is_prime(const EisensteinInt& x) {
    NormValue n = norm(x);
    if (n <= 1) return false;
    if (n <= UINT64_MAX && is_prime_u64(static_cast<std::uint64_t>(n))) return true;
    // remaining possibility: associate of an inert rational prime q ≡ 2 (mod 3)
    const i128 a = x.a, b = x.b;
    const i128 assoc[6][2] = {
        {a, b}, {-a, -b}, {-b, a - b}, {b, b - a}, {b - a, -a}, {a - b, a},
    };
    for (const auto& y : assoc) {
        if (y[1] != 0) continue;
        i128 q = y[0] < 0 ? -y[0] : y[0];
        return q % 3 == 2 && is_prime_u64(static_cast<std::uint64_t>(q));
    }
    if (n > UINT64_MAX) {
        throw std::domain_error("is_prime: norm exceeds the supported primality range");
    }
    return false;
}

PrimeClassification classify_rational_prime(std::int64_t p) {
    if (p < 2) throw std::domain_error("classify_rational_prime: p < 2");
    if (!is_prime_u64(static_cast<std::uint64_t>(p))) {
        throw std::domain_error("classify_rational_prime: composite input");
    }
    if (p == 3) return PrimeClassification::ramified;
    return p % 3 == 2 ? PrimeClassification::inert : PrimeClassification::split;
}

std::string to_string(PrimeClassification c) {
    switch (c) {
        case PrimeClassification::ramified: return "ramified";
        case PrimeClassification::inert: return "inert";
        case PrimeClassification::split: return "split";
    }
    return "?";
}

std::string to_string(const EisensteinInt& x) {
    if (x.is_zero()) return "0";
    std::string s;
    if (x.a != 0) s += std::to_string(x.a);
    if (x.b != 0) {
        if (x.b > 0 && x.a != 0) s += "+";
        if (x.b == -1) {
            s += "-";
        } else if (x.b != 1) {
            s += std::to_string(x.b);
        }
        s += "ω";
    }
    return s;
}

EisensteinInt parse_eisenstein(std::string_view text) {
    auto parse_int = [](std::string_view part) {
        size_t pos = 0;
        while (pos < part.size() && part[pos] == ' ') ++pos;
        size_t end = part.size();
        while (end > pos && part[end - 1] == ' ') --end;
        std::string token(part.substr(pos, end - pos));
        if (token.empty()) throw std::invalid_argument("parse_eisenstein: empty coordinate");
        size_t used = 0;
        long long v = 0;
        try {
            v = std::stoll(token, &used);
        } catch (const std::exception&) {
            throw std::invalid_argument("parse_eisenstein: bad integer '" + token + "'");
        }
        if (used != token.size()) {
            throw std::invalid_argument("parse_eisenstein: trailing characters in '" + token + "'");
        }
        return static_cast<std::int64_t>(v);
    };
    size_t comma = text.find(',');
    if (comma == std::string_view::npos) return EisensteinInt(parse_int(text), 0);
    if (text.find(',', comma + 1) != std::string_view::npos) {
        throw std::invalid_argument("parse_eisenstein: too many commas");
    }
    return EisensteinInt(parse_int(text.substr(0, comma)), parse_int(text.substr(comma + 1)));
}

std::complex<double> to_complex(const EisensteinInt& x) {
    static const std::complex<double> omega(-0.5, std::sqrt(3.0) / 2.0);
    return std::complex<double>(static_cast<double>(x.a), 0.0) + static_cast<double>(x.b) * omega;
}

std::ostream& operator<<(std::ostream& os, const EisensteinInt& x) {
    return os << to_string(x);
}

namespace detail {

ModReducer::ModReducer(const EisensteinInt& m) {
    if (m.is_zero()) throw std::domain_error("ModReducer: zero modulus");
    const i128 a = m.a, b = m.b;
    const i128 assoc[6][2] = {
        {a, b}, {-a, -b}, {-b, a - b}, {b, b - a}, {b - a, -a}, {a - b, a},
    };
    for (const auto& y : assoc) {
        if (y[1] == 0) {
            rational_ = true;
            q_ = y[0] < 0 ? -y[0] : y[0];
            return;
        }
    }
    d_ = static_cast<i128>(norm(m));
    if (d_ > (i128{1} << 52)) {
        throw std::domain_error("ModReducer: modulus norm exceeds the supported range");
    }
    ca_ = a - b;
    cb_ = -b;
}

EisensteinInt ModReducer::reduce_wide(i128 ra, i128 rb) const {
    if (rational_) {
        return make_checked(ra - round_div(ra, q_) * q_, rb - round_div(rb, q_) * q_);
    }
    const i128 na = ra * ca_ - rb * cb_;
    const i128 nb = ra * cb_ + rb * ca_ - rb * cb_;
    const i128 qa = round_div(na, d_), qb = round_div(nb, d_);
    // recover m from conj(m) = (ca_, cb_): b = -cb_, a = ca_ - cb_
    const i128 ma = ca_ - cb_, mb = -cb_;
    return make_checked(ra - (qa * ma - qb * mb), rb - (qa * mb + qb * ma - qb * mb));
}

EisensteinInt ModReducer::mul(const EisensteinInt& x, const EisensteinInt& y) const {
    const i128 xa = x.a, xb = x.b, ya = y.a, yb = y.b;
    return reduce_wide(xa * ya - xb * yb, xa * yb + xb * ya - xb * yb);
}

}  // namespace detail

}  // namespace cubres
