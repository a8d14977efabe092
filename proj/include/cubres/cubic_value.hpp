#pragma once

#include <complex>
#include <ostream>
#include <stdexcept>
#include <string>

#include "cubres/eisenstein.hpp"

namespace cubres {

/// Zero or a cube root of unity omega^k, k in {0, 1, 2}. Multiplication adds
/// exponents mod 3; zero absorbs.
class CubicValue {
public:
    constexpr CubicValue() : k_(-1) {}

    static constexpr CubicValue zero() { return CubicValue(-1); }
    static constexpr CubicValue omega_power(int k) {
        int r = k % 3;
        return CubicValue(r < 0 ? r + 3 : r);
    }
    static constexpr CubicValue one() { return CubicValue(0); }

    bool is_zero() const { return k_ < 0; }

    int power() const {
        if (k_ < 0) throw std::domain_error("CubicValue::power: value is zero");
        return k_;
    }

    CubicValue operator*(CubicValue o) const {
        if (is_zero() || o.is_zero()) return zero();
        return omega_power(k_ + o.k_);
    }

    friend bool operator==(CubicValue, CubicValue) = default;

    EisensteinInt to_eisenstein() const {
        if (is_zero()) return EisensteinInt(0, 0);
        switch (k_) {
            case 0: return EisensteinInt(1, 0);
            case 1: return EisensteinInt(0, 1);
            default: return EisensteinInt(-1, -1);
        }
    }

    std::complex<double> to_complex() const { return cubres::to_complex(to_eisenstein()); }

    std::string str() const {
        if (is_zero()) return "0";
        switch (k_) {
            case 0: return "1";
            case 1: return "ω";
            default: return "ω^2";
        }
    }

private:
    constexpr explicit CubicValue(int k) : k_(k) {}
    int k_;
};

inline std::ostream& operator<<(std::ostream& os, CubicValue v) {
    return os << v.str();
}

}  // namespace cubres
