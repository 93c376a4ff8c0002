#pragma once

// Sparse multivariate polynomials over exact rationals. Terms live in a map
// ordered by graded lex (total degree first, then lexicographic), ascending,
// so iteration order and serialization are deterministic. Zero coefficients
// are never stored.

#include "pdo/scalar.hpp"

#include <map>
#include <optional>
#include <string>
#include <vector>

namespace pdo {

using Exp = std::vector<int>;

inline int total_degree(const Exp& e) {
    int d = 0;
    for (int x : e) d += x;
    return d;
}

struct GradedLexLess {
    bool operator()(const Exp& a, const Exp& b) const {
        int da = total_degree(a), db = total_degree(b);
        if (da != db) return da < db;
        return a < b;  // lexicographic on equal total degree
    }
};

class Poly {
  public:
    using TermMap = std::map<Exp, Scalar, GradedLexLess>;

    explicit Poly(int nvars = 0) : nvars_(nvars) {}

    static Poly constant(int nvars, const Scalar& c) {
        Poly p(nvars);
        p.add_term(Exp(nvars, 0), c);
        return p;
    }
    static Poly variable(int nvars, int v) {
        Poly p(nvars);
        Exp e(nvars, 0);
        e[v] = 1;
        p.add_term(e, Scalar(1));
        return p;
    }
    static Poly monomial(int nvars, const Exp& e, const Scalar& c) {
        Poly p(nvars);
        p.add_term(e, c);
        return p;
    }

    int nvars() const { return nvars_; }
    bool is_zero() const { return terms_.empty(); }
    bool is_constant() const {
        return terms_.empty() || (terms_.size() == 1 && total_degree(terms_.begin()->first) == 0);
    }
    // Total degree; -1 for the zero polynomial.
    int degree() const { return terms_.empty() ? -1 : total_degree(terms_.rbegin()->first); }
    // Lowest total degree among the terms; -1 for zero.
    int order() const { return terms_.empty() ? -1 : total_degree(terms_.begin()->first); }
    int degree_in(int var) const {
        int d = terms_.empty() ? -1 : 0;
        for (const auto& [e, c] : terms_)
            if (e[var] > d) d = e[var];
        return d;
    }

    const TermMap& terms() const { return terms_; }
    std::size_t term_count() const { return terms_.size(); }

    Scalar coeff(const Exp& e) const {
        auto it = terms_.find(e);
        return it == terms_.end() ? Scalar(0) : it->second;
    }
    Scalar constant_term() const { return coeff(Exp(nvars_, 0)); }

    void add_term(const Exp& e, const Scalar& c) {
        if (c.is_zero()) return;
        auto [it, fresh] = terms_.emplace(e, c);
        if (!fresh) {
            it->second += c;
            if (it->second.is_zero()) terms_.erase(it);
        }
    }

    // Leading term under graded lex (the map's last entry).
    const std::pair<const Exp, Scalar>& leading_term() const {
        if (terms_.empty()) throw ZeroInput("zero polynomial has no leading term");
        return *terms_.rbegin();
    }

    Poly operator-() const {
        Poly r(nvars_);
        for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
        return r;
    }
    Poly& operator+=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, c);
        return *this;
    }
    Poly& operator-=(const Poly& o) {
        for (const auto& [e, c] : o.terms_) add_term(e, -c);
        return *this;
    }
    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);

    Poly scaled(const Scalar& c) const {
        Poly r(nvars_);
        if (c.is_zero()) return r;
        for (const auto& [e, k] : terms_) r.terms_.emplace(e, k * c);
        return r;
    }
    Poly mul_monomial(const Exp& m, const Scalar& c) const;

    Poly derivative(int var) const;
    // Substitute x_var = 0.
    Poly at_zero(int var) const;
    // Substitute x_var = 0 for every variable: the constant term.
    Poly homogeneous_part(int d) const;
    bool is_homogeneous() const;

    friend bool operator==(const Poly& a, const Poly& b) {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }
    friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

    // Human-readable form with the given variable names, e.g. {"x1","x2"}.
    std::string str(const std::vector<std::string>& names) const;

  private:
    int nvars_;
    TermMap terms_;
};

inline bool monomial_divides(const Exp& a, const Exp& b) {
    for (std::size_t i = 0; i < a.size(); ++i)
        if (a[i] > b[i]) return false;
    return true;
}

inline Exp exp_sub(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] - b[i];
    return r;
}

inline Exp exp_add(const Exp& a, const Exp& b) {
    Exp r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = a[i] + b[i];
    return r;
}

// Full reduction of f modulo the list g (graded lex): every term of the
// remainder is divisible by no leading term of g. Deterministic: terms are
// reduced from the top, divisors tried in list order.
Poly reduce(const Poly& f, const std::vector<Poly>& g);

// Exact division: returns the quotient if g divides f, nullopt otherwise.
std::optional<Poly> try_divide_exact(const Poly& f, const Poly& g);

// Gcd in k[x0] or k[x0,x1] (content/pseudo-remainder Euclid), normalized so
// the graded-lex leading coefficient is 1. gcd(0,0) = 0.
Poly poly_gcd(const Poly& a, const Poly& b);

}  // namespace pdo
