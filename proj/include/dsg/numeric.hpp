#pragma once

#include <boost/multiprecision/cpp_int.hpp>

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace dsg {

// All exact arithmetic in the library runs on arbitrary-precision integers.
using Int = boost::multiprecision::cpp_int;

// Raised when an operation is handed mathematically invalid or incomparable
// input (bad slope, mismatched links, out-of-range spin-c index, ...).
struct domain_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Raised when external text/JSON input cannot be parsed or fails schema
// validation. Messages carry positions where available.
struct input_error : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline Int abs_int(const Int& a) { return a < 0 ? Int(-a) : a; }

inline Int gcd_int(Int a, Int b) {
    a = abs_int(a);
    b = abs_int(b);
    while (b != 0) {
        Int t = a % b;
        a = b;
        b = t;
    }
    return a;
}

// g = gcd(a,b) >= 0 together with x,y such that x*a + y*b = g.
inline Int ext_gcd(const Int& a, const Int& b, Int& x, Int& y) {
    Int old_r = a, r = b;
    Int old_x = 1, cur_x = 0;
    Int old_y = 0, cur_y = 1;
    while (r != 0) {
        Int q = old_r / r;
        Int t = old_r - q * r; old_r = r; r = t;
        t = old_x - q * cur_x; old_x = cur_x; cur_x = t;
        t = old_y - q * cur_y; old_y = cur_y; cur_y = t;
    }
    if (old_r < 0) { old_r = -old_r; old_x = -old_x; old_y = -old_y; }
    x = old_x;
    y = old_y;
    return old_r;
}

// Floor division (C++ '/' truncates toward zero).
inline Int floor_div(const Int& a, const Int& b) {
    if (b == 0) throw domain_error("floor_div: division by zero");
    Int q = a / b;
    if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
    return q;
}

inline long long to_ll(const Int& a) {
    if (a > Int(INT64_MAX) || a < Int(INT64_MIN))
        throw domain_error("integer does not fit in 64 bits: " + a.str());
    return static_cast<long long>(a);
}

namespace detail {

inline Int mulmod(const Int& a, const Int& b, const Int& m) { return (a * b) % m; }

inline Int powmod(Int base, Int exp, const Int& m) {
    Int result = 1;
    base %= m;
    while (exp > 0) {
        if ((exp & 1) != 0) result = mulmod(result, base, m);
        base = mulmod(base, base, m);
        exp >>= 1;
    }
    return result;
}

inline bool miller_rabin_witness(const Int& n, const Int& a, const Int& d, int s) {
    Int x = powmod(a, d, n);
    if (x == 1 || x == n - 1) return false;
    for (int i = 1; i < s; ++i) {
        x = mulmod(x, x, n);
        if (x == n - 1) return false;
    }
    return true;  // a witnesses compositeness
}

}  // namespace detail

// Deterministic for n < 3.317e24 (first 13 prime bases); beyond that the same
// bases give a strong probable-prime test, far past anything this library
// produces.
inline bool is_prime(const Int& n) {
    if (n < 2) return false;
    for (int p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
        if (n == p) return true;
        if (n % p == 0) return false;
    }
    Int d = n - 1;
    int s = 0;
    while ((d & 1) == 0) { d >>= 1; ++s; }
    for (int a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37})
        if (detail::miller_rabin_witness(n, a, d, s)) return false;
    return true;
}

namespace detail {

// Pollard rho (Brent variant) with deterministic parameter sweep.
inline Int pollard_rho(const Int& n) {
    if (n % 2 == 0) return 2;
    for (Int c = 1; ; ++c) {
        Int x = 2, y = 2, d = 1;
        auto step = [&](const Int& v) { return (mulmod(v, v, n) + c) % n; };
        while (d == 1) {
            x = step(x);
            y = step(step(y));
            d = gcd_int(x - y, n);
        }
        if (d != n) return d;
    }
}

inline void factor_into(Int n, std::vector<std::pair<Int, int>>& out) {
    if (n <= 1) return;
    if (is_prime(n)) {
        out.emplace_back(n, 1);
        return;
    }
    Int d = pollard_rho(n);
    factor_into(d, out);
    factor_into(n / d, out);
}

}  // namespace detail

// Prime factorization, primes ascending. Trial division up to 1e6, then
// Miller-Rabin / Pollard rho on whatever remains.
inline std::vector<std::pair<Int, int>> factorize(Int n) {
    n = abs_int(n);
    if (n <= 1) return {};
    std::vector<std::pair<Int, int>> factors;
    auto strip = [&](const Int& p) {
        int e = 0;
        while (n % p == 0) { n /= p; ++e; }
        if (e > 0) factors.emplace_back(p, e);
    };
    strip(2);
    strip(3);
    for (Int p = 5; p <= 1000000 && p * p <= n; p += 6) {
        strip(p);
        strip(p + 2);
    }
    if (n > 1) {
        if (n < Int(1000000) * Int(1000000)) {
            factors.emplace_back(n, 1);  // no factor below 1e6, so prime
        } else {
            std::vector<std::pair<Int, int>> rest;
            detail::factor_into(n, rest);
            // merge repeated primes from the recursive split
            std::sort(rest.begin(), rest.end());
            for (auto& [p, e] : rest) {
                if (!factors.empty() && factors.back().first == p)
                    factors.back().second += e;
                else
                    factors.emplace_back(p, e);
            }
        }
    }
    std::sort(factors.begin(), factors.end());
    return factors;
}

// Exact rational with den >= 1 and gcd(|num|, den) = 1.
struct Rational {
    Int num{0};
    Int den{1};

    Rational() = default;
    Rational(Int n) : num(std::move(n)) {}  // NOLINT: implicit integer promotion intended
    Rational(long long n) : num(n) {}       // NOLINT
    Rational(Int n, Int d) : num(std::move(n)), den(std::move(d)) { normalize(); }

    void normalize() {
        if (den == 0) throw domain_error("rational with zero denominator");
        if (den < 0) { num = -num; den = -den; }
        Int g = gcd_int(num, den);
        if (g > 1) { num /= g; den /= g; }
        if (num == 0) den = 1;
    }

    bool is_integer() const { return den == 1; }

    Int floor() const { return floor_div(num, den); }

    // Fractional part in [0, 1).
    Rational frac() const { return *this - Rational(floor()); }

    Rational operator-() const { Rational r = *this; r.num = -r.num; return r; }
    Rational operator+(const Rational& o) const { return {num * o.den + o.num * den, den * o.den}; }
    Rational operator-(const Rational& o) const { return {num * o.den - o.num * den, den * o.den}; }
    Rational operator*(const Rational& o) const { return {num * o.num, den * o.den}; }
    Rational operator/(const Rational& o) const {
        if (o.num == 0) throw domain_error("rational division by zero");
        return {num * o.den, den * o.num};
    }
    Rational& operator+=(const Rational& o) { return *this = *this + o; }
    Rational& operator-=(const Rational& o) { return *this = *this - o; }

    bool operator==(const Rational& o) const { return num == o.num && den == o.den; }
    bool operator!=(const Rational& o) const { return !(*this == o); }
    bool operator<(const Rational& o) const { return num * o.den < o.num * den; }
    bool operator<=(const Rational& o) const { return num * o.den <= o.num * den; }
    bool operator>(const Rational& o) const { return o < *this; }
    bool operator>=(const Rational& o) const { return o <= *this; }

    std::string str() const {
        if (den == 1) return num.str();
        return num.str() + "/" + den.str();
    }

    double to_double() const {
        return static_cast<double>(num) / static_cast<double>(den);
    }

    // Accepts "a" or "a/b" with optional sign.
    static Rational parse(const std::string& text) {
        auto slash = text.find('/');
        try {
            if (slash == std::string::npos) return Rational(Int(text));
            Int n(text.substr(0, slash));
            Int d(text.substr(slash + 1));
            return {n, d};
        } catch (const std::exception&) {
            throw input_error("cannot parse rational '" + text + "'");
        }
    }
};

}  // namespace dsg
