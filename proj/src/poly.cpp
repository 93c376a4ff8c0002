#include "pdo/poly.hpp"

#include <sstream>

namespace pdo {

Poly operator*(const Poly& a, const Poly& b) {
    Poly r(a.nvars());
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

Poly Poly::mul_monomial(const Exp& m, const Scalar& c) const {
    Poly r(nvars_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(exp_add(e, m), k * c);
    return r;
}

Poly Poly::derivative(int var) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_) {
        if (e[var] == 0) continue;
        Exp d = e;
        d[var] -= 1;
        r.add_term(d, c * Scalar(e[var]));
    }
    return r;
}

Poly Poly::at_zero(int var) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (e[var] == 0) r.terms_.emplace(e, c);
    return r;
}

Poly Poly::homogeneous_part(int d) const {
    Poly r(nvars_);
    for (const auto& [e, c] : terms_)
        if (total_degree(e) == d) r.terms_.emplace(e, c);
    return r;
}

bool Poly::is_homogeneous() const {
    if (terms_.empty()) return true;
    return total_degree(terms_.begin()->first) == total_degree(terms_.rbegin()->first);
}

std::string Poly::str(const std::vector<std::string>& names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    // Print highest terms first; that is the usual human order.
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        const auto& [e, c] = *it;
        Scalar abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = abs.is_one();
        bool has_var = total_degree(e) > 0;
        if (!unit || !has_var) out << abs.str();
        bool star = !unit && has_var;
        for (int v = 0; v < nvars_; ++v) {
            if (e[v] == 0) continue;
            if (star) out << "*";
            star = true;
            out << names[v];
            if (e[v] > 1) out << "^" << e[v];
        }
    }
    return out.str();
}

Poly reduce(const Poly& f, const std::vector<Poly>& g) {
    Poly rem(f.nvars());
    Poly work = f;
    while (!work.is_zero()) {
        const auto& [e, c] = work.leading_term();
        bool reduced = false;
        for (const auto& gi : g) {
            if (gi.is_zero()) continue;
            const auto& [ge, gc] = gi.leading_term();
            if (monomial_divides(ge, e)) {
                work -= gi.mul_monomial(exp_sub(e, ge), c / gc);
                reduced = true;
                break;
            }
        }
        if (!reduced) {
            rem.add_term(e, c);
            Poly lead(f.nvars());
            lead.add_term(e, c);
            work -= lead;
        }
    }
    return rem;
}

std::optional<Poly> try_divide_exact(const Poly& f, const Poly& g) {
    if (g.is_zero()) return std::nullopt;
    Poly q(f.nvars());
    Poly work = f;
    const auto& [ge, gc] = g.leading_term();
    while (!work.is_zero()) {
        const auto& [e, c] = work.leading_term();
        if (!monomial_divides(ge, e)) return std::nullopt;
        Exp m = exp_sub(e, ge);
        Scalar k = c / gc;
        q.add_term(m, k);
        work -= g.mul_monomial(m, k);
    }
    return q;
}

namespace {

// Univariate gcd over the rationals by plain Euclid; inputs are given as
// dense coefficient vectors (low degree first). Result is monic.
std::vector<Scalar> uni_gcd(std::vector<Scalar> a, std::vector<Scalar> b) {
    auto trim = [](std::vector<Scalar>& p) {
        while (!p.empty() && p.back().is_zero()) p.pop_back();
    };
    trim(a);
    trim(b);
    while (!b.empty()) {
        // a mod b
        while (a.size() >= b.size() && !a.empty()) {
            Scalar k = a.back() / b.back();
            std::size_t off = a.size() - b.size();
            for (std::size_t i = 0; i < b.size(); ++i) a[off + i] -= k * b[i];
            trim(a);
        }
        std::swap(a, b);
    }
    if (!a.empty()) {
        Scalar lead = a.back();
        for (auto& c : a) c /= lead;
    }
    return a;
}

// View a bivariate polynomial as a polynomial in x0 with k[x1] coefficients.
std::vector<Poly> coeffs_in_x0(const Poly& p) {
    std::vector<Poly> cs(static_cast<std::size_t>(p.degree_in(0) + 1), Poly(p.nvars()));
    for (const auto& [e, c] : p.terms()) {
        Exp rest = e;
        rest[0] = 0;
        cs[static_cast<std::size_t>(e[0])].add_term(rest, c);
    }
    return cs;
}

std::vector<Scalar> dense_in_var(const Poly& p, int var) {
    std::vector<Scalar> cs(static_cast<std::size_t>(p.degree_in(var) + 1), Scalar(0));
    for (const auto& [e, c] : p.terms()) cs[static_cast<std::size_t>(e[var])] += c;
    return cs;
}

Poly from_dense(int nvars, int var, const std::vector<Scalar>& cs) {
    Poly p(nvars);
    for (std::size_t i = 0; i < cs.size(); ++i) {
        Exp e(nvars, 0);
        e[var] = static_cast<int>(i);
        p.add_term(e, cs[i]);
    }
    return p;
}

Poly normalize_monic(const Poly& p) {
    if (p.is_zero()) return p;
    return p.scaled(inverse(p.leading_term().second));
}

// Gcd of the x1-only coefficients of a bivariate polynomial (its content
// with respect to x0).
Poly content_x0(const Poly& p) {
    auto cs = coeffs_in_x0(p);
    std::vector<Scalar> acc;
    for (const auto& c : cs) {
        if (c.is_zero()) continue;
        acc = uni_gcd(acc, dense_in_var(c, 1));
        if (acc.size() == 1) break;  // content is a unit
    }
    return from_dense(p.nvars(), 1, acc);
}

}  // namespace

Poly poly_gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_monic(b);
    if (b.is_zero()) return normalize_monic(a);
    if (a.is_constant() || b.is_constant()) return Poly::constant(a.nvars(), Scalar(1));
    if (a.nvars() == 1 || (a.degree_in(0) == 0 && b.degree_in(0) == 0)) {
        int var = (a.nvars() > 1 && a.degree_in(0) == 0) ? 1 : 0;
        return from_dense(a.nvars(), var, uni_gcd(dense_in_var(a, var), dense_in_var(b, var)));
    }
    if (a.nvars() != 2) throw Error("poly_gcd supports one or two variables");
    if (a.degree_in(1) == 0 && b.degree_in(1) == 0)
        return from_dense(2, 0, uni_gcd(dense_in_var(a, 0), dense_in_var(b, 0)));
    if (a.degree_in(0) == 0 || b.degree_in(0) == 0) {
        // One argument is free of x0: the gcd divides it, hence is free of
        // x0 too, and must divide the other's content.
        const Poly& pure = a.degree_in(0) == 0 ? a : b;
        const Poly& other = a.degree_in(0) == 0 ? b : a;
        return normalize_monic(poly_gcd(pure, content_x0(other)));
    }

    Poly ca = content_x0(a), cb = content_x0(b);
    Poly cont = from_dense(2, 1, uni_gcd(dense_in_var(ca, 1), dense_in_var(cb, 1)));
    auto pp = [](const Poly& p, const Poly& c) {
        auto q = try_divide_exact(p, c);
        if (!q) throw Error("content does not divide its polynomial");
        return *q;
    };
    Poly u = pp(a, ca), v = pp(b, cb);

    // Pseudo-remainder Euclid on primitive parts, stripping content each
    // round to keep coefficients small.
    while (!v.is_zero() && v.degree_in(0) > 0) {
        Poly r = u;
        Poly vlead(2);
        {
            auto vc = coeffs_in_x0(v);
            vlead = vc.back();
        }
        int dv = v.degree_in(0);
        while (!r.is_zero() && r.degree_in(0) >= dv) {
            auto rc = coeffs_in_x0(r);
            Poly rlead = rc.back();
            int dr = r.degree_in(0);
            // lc(v) * r - lc(r) * x0^(dr-dv) * v kills the top x0 term.
            Poly vshift(2);
            for (const auto& [e, c] : v.terms()) {
                Exp e2 = e;
                e2[0] += dr - dv;
                vshift.add_term(e2, c);
            }
            r = r * vlead - vshift * rlead;
        }
        Poly rcont = r.is_zero() ? Poly(2) : content_x0(r);
        u = v;
        v = r.is_zero() ? Poly(2) : pp(r, rcont);
    }
    Poly g = v.is_zero() ? u : Poly::constant(2, Scalar(1));
    if (!v.is_zero() && v.degree_in(0) == 0) {
        // Euclid bottomed out in a polynomial free of x0 that still divides
        // both primitive parts only if trivial.
        g = Poly::constant(2, Scalar(1));
    }
    Poly gc = content_x0(g);
    g = pp(g, gc);
    return normalize_monic(g * cont);
}

}  // namespace pdo
