#pragma once

// Integer exponent vectors in Z^d and small combinatorial helpers.

#include <compare>
#include <cstdint>
#include <functional>
#include <string>
#include <vector>

#include "wittmod/rational.hpp"

namespace wittmod {

struct ExpVec {
    std::vector<std::int64_t> e;

    ExpVec() = default;
    explicit ExpVec(int d) : e(static_cast<std::size_t>(d), 0) {
        require(d >= 1, "ExpVec: dimension must be >= 1");
    }
    ExpVec(std::initializer_list<std::int64_t> init) : e(init) {}
    explicit ExpVec(std::vector<std::int64_t> v) : e(std::move(v)) {}

    int dim() const { return static_cast<int>(e.size()); }
    std::int64_t operator[](int i) const { return e[static_cast<std::size_t>(i)]; }
    std::int64_t& operator[](int i) { return e[static_cast<std::size_t>(i)]; }

    auto operator<=>(const ExpVec&) const = default;

    bool is_zero() const {
        for (auto x : e)
            if (x) return false;
        return true;
    }
    bool nonneg() const {
        for (auto x : e)
            if (x < 0) return false;
        return true;
    }
    std::int64_t total() const {
        std::int64_t t = 0;
        for (auto x : e) t += x;
        return t;
    }

    ExpVec operator+(const ExpVec& o) const {
        require(dim() == o.dim(), "ExpVec: dimension mismatch");
        ExpVec r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] += o.e[i];
        return r;
    }
    ExpVec operator-(const ExpVec& o) const {
        require(dim() == o.dim(), "ExpVec: dimension mismatch");
        ExpVec r(*this);
        for (std::size_t i = 0; i < e.size(); ++i) r.e[i] -= o.e[i];
        return r;
    }
    ExpVec operator-() const {
        ExpVec r(*this);
        for (auto& x : r.e) x = -x;
        return r;
    }
};

// Exponent unit vector e_i (1-based).
inline ExpVec exp_unit(int d, int i) {
    require(i >= 1 && i <= d, "exp_unit: index out of range");
    ExpVec r(d);
    r[i - 1] = 1;
    return r;
}

inline RationalVec to_rational_vec(const ExpVec& n) {
    RationalVec out;
    out.reserve(n.e.size());
    for (auto x : n.e) out.emplace_back(x);
    return out;
}

// "(1,-2)"
inline std::string ev_str(const ExpVec& n) {
    std::string s = "(";
    for (std::size_t i = 0; i < n.e.size(); ++i) {
        if (i) s += ",";
        s += std::to_string(n.e[i]);
    }
    return s + ")";
}

// lambda^n = prod lambda_i^{n_i}; all lambda_i must be nonzero when n_i < 0.
inline Rational rat_monomial_pow(const RationalVec& lambda, const ExpVec& n) {
    require(static_cast<int>(lambda.size()) == n.dim(), "power: dimension mismatch");
    Rational acc(1);
    for (int i = 0; i < n.dim(); ++i) acc *= rat_pow(lambda[static_cast<std::size_t>(i)], n[i]);
    return acc;
}

// Enumerates {lo..hi}^d in lexicographic order.
inline void for_each_box(int d, std::int64_t lo, std::int64_t hi,
                         const std::function<void(const ExpVec&)>& fn) {
    ExpVec cur(d);
    for (auto& x : cur.e) x = lo;
    while (true) {
        fn(cur);
        int i = d - 1;
        while (i >= 0) {
            if (cur[i] < hi) {
                ++cur[i];
                break;
            }
            cur[i] = lo;
            --i;
        }
        if (i < 0) break;
    }
}

inline std::vector<ExpVec> box_points(int d, std::int64_t lo, std::int64_t hi) {
    std::vector<ExpVec> out;
    for_each_box(d, lo, hi, [&](const ExpVec& n) { out.push_back(n); });
    return out;
}

// All strictly increasing k-subsets of {1..d} in lexicographic order.
inline std::vector<std::vector<int>> k_subsets(int d, int k) {
    std::vector<std::vector<int>> out;
    if (k < 0 || k > d) return out;
    std::vector<int> cur(static_cast<std::size_t>(k));
    for (int i = 0; i < k; ++i) cur[static_cast<std::size_t>(i)] = i + 1;
    while (true) {
        out.push_back(cur);
        if (k == 0) break;
        int i = k - 1;
        while (i >= 0 && cur[static_cast<std::size_t>(i)] == d - (k - 1 - i)) --i;
        if (i < 0) break;
        ++cur[static_cast<std::size_t>(i)];
        for (int j = i + 1; j < k; ++j)
            cur[static_cast<std::size_t>(j)] = cur[static_cast<std::size_t>(j - 1)] + 1;
    }
    return out;
}

}  // namespace wittmod
