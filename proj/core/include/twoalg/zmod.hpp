#pragma once

/// Exact residue arithmetic over Z/m. Everything in this library works with
/// coefficients held in the canonical range [0, m); these helpers are the
/// only place raw modular arithmetic happens.

#include <cstdint>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace twoalg {

using Coeff = std::int64_t;
using Vec = std::vector<Coeff>;

/// The ground ring k = Z/m. m >= 2 is required; m need not be prime. The
/// upper bound keeps products of two residues inside int64.
inline constexpr Coeff kMaxModulus = (Coeff{1} << 31) - 1;

struct CoefficientRing {
    Coeff modulus = 2;

    explicit CoefficientRing(Coeff m) : modulus(m) {
        if (m < 2)
            throw std::invalid_argument("CoefficientRing: modulus must be >= 2, got " +
                                        std::to_string(m));
        if (m > kMaxModulus)
            throw std::invalid_argument("CoefficientRing: modulus exceeds " +
                                        std::to_string(kMaxModulus));
    }
    CoefficientRing() = default;

    bool operator==(const CoefficientRing&) const = default;
};

inline Coeff residue(Coeff x, Coeff m) {
    x %= m;
    return x < 0 ? x + m : x;
}

/// g = gcd(a, b) together with s, t such that s*a + t*b = g.
std::tuple<Coeff, Coeff, Coeff> xgcd(Coeff a, Coeff b);

Coeff gcd(Coeff a, Coeff b);

/// Inverse of a modulo m. Throws std::domain_error when gcd(a, m) != 1.
Coeff mod_inverse(Coeff a, Coeff m);

/// A unit u mod m with u*a == gcd(a, m) (mod m), for 0 < a < m.
/// This is the scaling that normalizes a Howell pivot to a divisor of m.
Coeff stabilizing_unit(Coeff a, Coeff m);

// Vector helpers; inputs are expected reduced, outputs are reduced.

Vec vec_add(const Vec& a, const Vec& b, Coeff m);
Vec vec_sub(const Vec& a, const Vec& b, Coeff m);
Vec vec_scale(Coeff c, const Vec& a, Coeff m);
void vec_add_scaled(Vec& acc, Coeff c, const Vec& a, Coeff m);
bool vec_is_zero(const Vec& a);
Vec vec_zero(std::size_t n);
Vec vec_unit(std::size_t n, std::size_t i);

std::string vec_to_string(const Vec& v);

}  // namespace twoalg
