#pragma once

// Exact rational scalars and rational vectors.
//
// All scalar arithmetic in this library is over Q.  We use
// boost::multiprecision::cpp_rational, which keeps values in canonical
// form (reduced, positive denominator), so equality is literal.

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

namespace wittmod {

using BigInt = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

struct AlgebraError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

inline void require(bool cond, const std::string& msg) {
    if (!cond) throw AlgebraError(msg);
}

inline bool is_zero(const Rational& r) { return r.is_zero(); }

// Canonical rendering: "p" when the denominator is 1, else "p/q".
inline std::string rat_str(const Rational& r) { return r.str(); }

// Parses "p", "p/q" or "-p/q".  Whitespace is not accepted.
inline Rational rat_parse(const std::string& s) {
    if (s.empty()) throw AlgebraError("empty rational literal");
    auto slash = s.find('/');
    try {
        if (slash == std::string::npos) return Rational(BigInt(s));
        BigInt num(s.substr(0, slash));
        BigInt den(s.substr(slash + 1));
        require(den != 0, "rational literal with zero denominator: " + s);
        return Rational(num, den);
    } catch (const std::exception& e) {
        throw AlgebraError("bad rational literal '" + s + "': " + e.what());
    }
}

// r^e for integer e; e < 0 requires r != 0.
inline Rational rat_pow(const Rational& r, std::int64_t e) {
    if (e == 0) return Rational(1);
    if (e < 0) {
        require(!is_zero(r), "zero raised to a negative power");
        return rat_pow(Rational(1) / r, -e);
    }
    Rational acc(1), base = r;
    std::uint64_t n = static_cast<std::uint64_t>(e);
    while (n) {
        if (n & 1) acc *= base;
        base *= base;
        n >>= 1;
    }
    return acc;
}

using RationalVec = std::vector<Rational>;

// (u|v) = u^T v.
inline Rational pairing(const RationalVec& u, const RationalVec& v) {
    require(u.size() == v.size(), "pairing: length mismatch");
    Rational acc(0);
    for (std::size_t i = 0; i < u.size(); ++i) acc += u[i] * v[i];
    return acc;
}

inline bool is_zero(const RationalVec& u) {
    for (const auto& c : u)
        if (!is_zero(c)) return false;
    return true;
}

inline RationalVec rvec_scale(const Rational& c, const RationalVec& u) {
    RationalVec out(u);
    for (auto& x : out) x *= c;
    return out;
}

inline RationalVec rvec_sub(const RationalVec& u, const RationalVec& v) {
    require(u.size() == v.size(), "vector length mismatch");
    RationalVec out(u);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] -= v[i];
    return out;
}

inline RationalVec rvec_add(const RationalVec& u, const RationalVec& v) {
    require(u.size() == v.size(), "vector length mismatch");
    RationalVec out(u);
    for (std::size_t i = 0; i < v.size(); ++i) out[i] += v[i];
    return out;
}

// Standard basis vector e_i (1-based i).
inline RationalVec unit_vec(int d, int i) {
    require(i >= 1 && i <= d, "unit_vec: index out of range");
    RationalVec u(d, Rational(0));
    u[i - 1] = 1;
    return u;
}

inline RationalVec ones_vec(int d) { return RationalVec(d, Rational(1)); }

// "(1,0,-1/2)"
inline std::string rvec_str(const RationalVec& u) {
    std::string s = "(";
    for (std::size_t i = 0; i < u.size(); ++i) {
        if (i) s += ",";
        s += rat_str(u[i]);
    }
    return s + ")";
}

inline BigInt binomial(int n, int k) {
    if (k < 0 || k > n) return 0;
    BigInt acc(1);
    for (int i = 0; i < k; ++i) {
        acc *= (n - i);
        acc /= (i + 1);
    }
    return acc;
}

inline std::int64_t binomial_i64(int n, int k) {
    return static_cast<std::int64_t>(binomial(n, k));
}

// Deterministic PRNG used for all sampling; splitmix64.
struct SplitMix64 {
    std::uint64_t state;
    explicit SplitMix64(std::uint64_t seed) : state(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }

    // Uniform in [lo, hi], inclusive.
    std::int64_t range(std::int64_t lo, std::int64_t hi) {
        require(lo <= hi, "SplitMix64::range: empty interval");
        std::uint64_t span = static_cast<std::uint64_t>(hi - lo) + 1;
        return lo + static_cast<std::int64_t>(next() % span);
    }

    // Small nonzero rational with numerator in [-4,4] and denominator in {1,2,3}.
    Rational small_rational() {
        std::int64_t num = 0;
        while (num == 0) num = range(-4, 4);
        std::int64_t den = range(1, 3);
        return Rational(num, den);
    }
};

inline std::uint64_t fnv1a(const std::string& s) {
    std::uint64_t h = 1469598103934665603ULL;
    for (unsigned char c : s) {
        h ^= c;
        h *= 1099511628211ULL;
    }
    return h;
}

}  // namespace wittmod
