#pragma once

// Sparse exact-rational multivariate polynomials.
//
// LaurentPoly: exponents in Z^d (the algebra A_d of Laurent polynomials).
// PolyH:      exponents in Z_+^d (U(h) = Q[D1..Dd], also reused for Q[t1..td]).
//
// Terms live in a std::map keyed by exponent vector, so iteration order is
// lexicographic and renderings are bit-stable.  Zero coefficients are never
// stored.

#include <map>
#include <string>
#include <utility>

#include "wittmod/expvec.hpp"
#include "wittmod/rational.hpp"

namespace wittmod {

struct LaurentTag {
    static constexpr const char* name = "LaurentPoly";
    static void check_key(const ExpVec&) {}
};

struct NonNegTag {
    static constexpr const char* name = "PolyH";
    static void check_key(const ExpVec& n) {
        require(n.nonneg(), "PolyH: negative exponent");
    }
};

template <typename Tag>
class BasicPoly {
  public:
    using TermMap = std::map<ExpVec, Rational>;

    explicit BasicPoly(int d) : dim_(d) {
        require(d >= 1, "polynomial dimension must be >= 1");
    }

    static BasicPoly constant(int d, const Rational& c) {
        BasicPoly p(d);
        p.add_term(ExpVec(d), c);
        return p;
    }

    static BasicPoly monomial(int d, const ExpVec& n, const Rational& c) {
        require(n.dim() == d, "monomial: dimension mismatch");
        BasicPoly p(d);
        p.add_term(n, c);
        return p;
    }

    // The single variable with index i (1-based): D_i, t_i or x_i.
    static BasicPoly variable(int d, int i) {
        return monomial(d, exp_unit(d, i), Rational(1));
    }

    int dim() const { return dim_; }
    const TermMap& terms() const { return terms_; }
    bool is_zero() const { return terms_.empty(); }
    std::size_t term_count() const { return terms_.size(); }

    Rational coeff(const ExpVec& n) const {
        auto it = terms_.find(n);
        return it == terms_.end() ? Rational(0) : it->second;
    }

    void add_term(const ExpVec& n, const Rational& c) {
        require(n.dim() == dim_, "term: dimension mismatch");
        Tag::check_key(n);
        if (wittmod::is_zero(c)) return;
        auto [it, inserted] = terms_.emplace(n, c);
        if (!inserted) {
            it->second += c;
            if (wittmod::is_zero(it->second)) terms_.erase(it);
        }
    }

    bool operator==(const BasicPoly& o) const {
        return dim_ == o.dim_ && terms_ == o.terms_;
    }

    BasicPoly operator+(const BasicPoly& o) const {
        require(dim_ == o.dim_, "poly add: dimension mismatch");
        BasicPoly out(*this);
        for (const auto& [n, c] : o.terms_) out.add_term(n, c);
        return out;
    }

    BasicPoly operator-(const BasicPoly& o) const {
        require(dim_ == o.dim_, "poly sub: dimension mismatch");
        BasicPoly out(*this);
        for (const auto& [n, c] : o.terms_) out.add_term(n, -c);
        return out;
    }

    BasicPoly operator-() const {
        BasicPoly out(dim_);
        for (const auto& [n, c] : terms_) out.terms_.emplace(n, -c);
        return out;
    }

    BasicPoly operator*(const BasicPoly& o) const {
        require(dim_ == o.dim_, "poly mul: dimension mismatch");
        BasicPoly out(dim_);
        for (const auto& [n, c] : terms_)
            for (const auto& [m, b] : o.terms_) out.add_term(n + m, c * b);
        return out;
    }

    BasicPoly scaled(const Rational& c) const {
        BasicPoly out(dim_);
        if (wittmod::is_zero(c)) return out;
        for (const auto& [n, a] : terms_) out.terms_.emplace(n, a * c);
        return out;
    }

    // Exact evaluation at a rational point.
    Rational eval(const RationalVec& alpha) const {
        require(static_cast<int>(alpha.size()) == dim_, "eval: dimension mismatch");
        Rational acc(0);
        for (const auto& [n, c] : terms_) acc += c * rat_monomial_pow(alpha, n);
        return acc;
    }

    // Max total degree; -1 for the zero polynomial.
    std::int64_t total_degree() const {
        std::int64_t deg = -1;
        for (const auto& [n, c] : terms_) deg = std::max(deg, n.total());
        return deg;
    }

    // True when every term has the same total degree (zero poly counts).
    bool is_homogeneous() const {
        std::int64_t deg = -2;
        for (const auto& [n, c] : terms_) {
            if (deg == -2) deg = n.total();
            else if (n.total() != deg) return false;
        }
        return true;
    }

  private:
    int dim_;
    TermMap terms_;
};

using LaurentPoly = BasicPoly<LaurentTag>;
using PolyH = BasicPoly<NonNegTag>;

// h(D - c): substitute D_i -> D_i - c_i.  Exact; exponents stay nonnegative.
inline PolyH poly_shift(const PolyH& h, const RationalVec& c) {
    require(static_cast<int>(c.size()) == h.dim(), "poly_shift: dimension mismatch");
    const int d = h.dim();
    PolyH out(d);
    for (const auto& [n, a] : h.terms()) {
        // prod_i (D_i - c_i)^{n_i}, expanded by the binomial theorem
        PolyH term = PolyH::constant(d, a);
        for (int i = 0; i < d; ++i) {
            if (n[i] == 0) continue;
            PolyH binom(d);
            for (std::int64_t k = 0; k <= n[i]; ++k) {
                ExpVec m(d);
                m[i] = k;
                Rational coef = Rational(binomial(static_cast<int>(n[i]), static_cast<int>(k))) *
                                rat_pow(-c[static_cast<std::size_t>(i)], n[i] - k);
                binom.add_term(m, coef);
            }
            term = term * binom;
        }
        out = out + term;
    }
    return out;
}

inline Rational poly_eval(const PolyH& h, const RationalVec& alpha) { return h.eval(alpha); }

// Exact division f / g in the polynomial ring.  Throws unless g divides f.
inline PolyH poly_exact_div(const PolyH& f, const PolyH& g) {
    require(f.dim() == g.dim(), "poly_exact_div: dimension mismatch");
    require(!g.is_zero(), "poly_exact_div: division by zero");
    PolyH rem = f;
    PolyH quot(f.dim());
    const auto& glead = *g.terms().rbegin();  // lex-largest term
    while (!rem.is_zero()) {
        const auto& rlead = *rem.terms().rbegin();
        ExpVec q = rlead.first - glead.first;
        if (!q.nonneg()) throw AlgebraError("poly_exact_div: not divisible");
        Rational qc = rlead.second / glead.second;
        PolyH qmono = PolyH::monomial(f.dim(), q, qc);
        quot = quot + qmono;
        rem = rem - qmono * g;
    }
    return quot;
}

namespace detail {

inline void append_coeff_prefix(std::string& s, const Rational& c, bool first,
                                bool has_vars) {
    Rational a = c;
    bool neg = a < 0;
    if (neg) a = -a;
    if (first) {
        if (neg) s += "-";
    } else {
        s += neg ? " - " : " + ";
    }
    if (a != 1 || !has_vars) {
        s += rat_str(a);
        if (has_vars) s += "*";
    }
}

}  // namespace detail

// "3*x^(1,-2) + 2*x^(0,2)"; constants render bare.  Deterministic (lex order).
inline std::string to_string(const LaurentPoly& p) {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [n, c] : p.terms()) {
        bool has_vars = !n.is_zero();
        detail::append_coeff_prefix(s, c, first, has_vars);
        if (has_vars) s += "x^" + ev_str(n);
        first = false;
    }
    return s;
}

// "2*D1^3*D2 - 1/2" with the given variable stem (D1..Dd, t1..td, ...).
inline std::string to_string(const PolyH& p, const std::string& var = "D") {
    if (p.is_zero()) return "0";
    std::string s;
    bool first = true;
    for (const auto& [n, c] : p.terms()) {
        bool has_vars = !n.is_zero();
        detail::append_coeff_prefix(s, c, first, has_vars);
        bool firstvar = true;
        for (int i = 0; i < n.dim(); ++i) {
            if (n[i] == 0) continue;
            if (!firstvar) s += "*";
            s += var + std::to_string(i + 1);
            if (n[i] > 1) s += "^" + std::to_string(n[i]);
            firstvar = false;
        }
        first = false;
    }
    return s;
}

}  // namespace wittmod
