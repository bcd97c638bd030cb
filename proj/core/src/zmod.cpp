#include "twoalg/zmod.hpp"

#include <numeric>
#include <sstream>

namespace twoalg {

std::tuple<Coeff, Coeff, Coeff> xgcd(Coeff a, Coeff b) {
    Coeff old_r = a, r = b;
    Coeff old_s = 1, s = 0;
    Coeff old_t = 0, t = 1;
    while (r != 0) {
        Coeff q = old_r / r;
        old_r -= q * r;
        std::swap(old_r, r);
        old_s -= q * s;
        std::swap(old_s, s);
        old_t -= q * t;
        std::swap(old_t, t);
    }
    if (old_r < 0) {
        old_r = -old_r;
        old_s = -old_s;
        old_t = -old_t;
    }
    return {old_r, old_s, old_t};
}

Coeff gcd(Coeff a, Coeff b) {
    return std::gcd(a, b);
}

Coeff mod_inverse(Coeff a, Coeff m) {
    auto [g, s, t] = xgcd(residue(a, m), m);
    (void)t;
    if (g != 1)
        throw std::domain_error("mod_inverse: " + std::to_string(a) + " is not a unit mod " +
                                std::to_string(m));
    return residue(s, m);
}

Coeff stabilizing_unit(Coeff a, Coeff m) {
    Coeff g = gcd(a, m);
    Coeff u0 = mod_inverse(a / g, m / g);
    // u0 is a unit mod m/g; shift by multiples of m/g until it is a unit mod m.
    for (Coeff k = 0; k < g; ++k) {
        Coeff u = u0 + k * (m / g);
        if (gcd(residue(u, m), m) == 1) return residue(u, m);
    }
    throw std::logic_error("stabilizing_unit: no unit found (unreachable)");
}

Vec vec_add(const Vec& a, const Vec& b, Coeff m) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = residue(a[i] + b[i], m);
    return r;
}

Vec vec_sub(const Vec& a, const Vec& b, Coeff m) {
    Vec r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = residue(a[i] - b[i], m);
    return r;
}

Vec vec_scale(Coeff c, const Vec& a, Coeff m) {
    Vec r(a.size());
    c = residue(c, m);
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = residue(c * a[i], m);
    return r;
}

void vec_add_scaled(Vec& acc, Coeff c, const Vec& a, Coeff m) {
    c = residue(c, m);
    for (std::size_t i = 0; i < acc.size(); ++i) acc[i] = residue(acc[i] + c * a[i], m);
}

bool vec_is_zero(const Vec& a) {
    for (Coeff x : a)
        if (x != 0) return false;
    return true;
}

Vec vec_zero(std::size_t n) {
    return Vec(n, 0);
}

Vec vec_unit(std::size_t n, std::size_t i) {
    Vec v(n, 0);
    v[i] = 1;
    return v;
}

std::string vec_to_string(const Vec& v) {
    std::ostringstream os;
    os << '(';
    for (std::size_t i = 0; i < v.size(); ++i) {
        if (i) os << ',';
        os << v[i];
    }
    os << ')';
    return os.str();
}

}  // namespace twoalg
