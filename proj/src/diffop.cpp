#include "pdo/diffop.hpp"

#include <cassert>
#include <sstream>

namespace pdo {

void SymbolPoly::add_term(const Exp& xi, const TruncatedSeries& coef) {
    precision_ = std::min(precision_, coef.precision());
    // keep stored coefficients cut to the shared precision, so zero tests
    // never see digits the symbol no longer certifies
    TruncatedSeries cut = coef.truncated(precision_);
    auto it = terms_.find(xi);
    if (it == terms_.end()) {
        if (!cut.is_zero()) terms_.emplace(xi, cut);
    } else {
        it->second = it->second + cut;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

SymbolPoly SymbolPoly::operator-() const {
    SymbolPoly r(nvars_, precision_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

SymbolPoly operator+(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r(a.nvars(), std::min(a.precision(), b.precision()));
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

SymbolPoly operator-(const SymbolPoly& a, const SymbolPoly& b) {
    return a + (-b);
}

SymbolPoly operator*(const SymbolPoly& a, const SymbolPoly& b) {
    SymbolPoly r(a.nvars(), std::min(a.precision(), b.precision()));
    for (const auto& [ea, ca] : a.terms())
        for (const auto& [eb, cb] : b.terms()) r.add_term(exp_add(ea, eb), ca * cb);
    return r;
}

SymbolPoly SymbolPoly::derivative_xi(int v) const {
    SymbolPoly r(nvars_, precision_);
    for (const auto& [e, c] : terms_) {
        if (e[v] == 0) continue;
        Exp d = e;
        d[v] -= 1;
        r.add_term(d, c.scaled(Scalar(e[v])));
    }
    return r;
}

SymbolPoly SymbolPoly::derivative_x(int v) const {
    SymbolPoly r(nvars_, sat_sub(precision_, 1));
    for (const auto& [e, c] : terms_) r.add_term(e, c.derivative(v));
    return r;
}

Poly SymbolPoly::image_at_x_zero() const {
    if (precision_ < 1) throw PrecisionZero();
    Poly img(nvars_);
    for (const auto& [e, c] : terms_) img.add_term(e, c.body().constant_term());
    return img;
}

bool SymbolPoly::is_constant_in_x() const {
    for (const auto& [e, c] : terms_)
        if (!c.body().is_constant()) return false;
    return true;
}

bool SymbolPoly::agrees_with(const SymbolPoly& o) const {
    SymbolPoly d = *this - o;
    for (const auto& [e, c] : d.terms_)
        if (!c.is_zero()) return false;
    return true;
}

std::string SymbolPoly::str(const std::vector<std::string>& xi_names,
                            const std::vector<std::string>& x_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << "(" << it->second.body().str(x_names) << ")";
        for (int v = 0; v < nvars_; ++v) {
            if (it->first[v] == 0) continue;
            out << "*" << xi_names[v];
            if (it->first[v] > 1) out << "^" << it->first[v];
        }
    }
    if (precision_ != kExact) out << " + O(M^" << precision_ << ")";
    return out.str();
}

SymbolPoly poisson_bracket(const SymbolPoly& s, const SymbolPoly& r) {
    SymbolPoly acc(s.nvars(), std::min(s.precision(), r.precision()));
    for (int v = 0; v < s.nvars(); ++v) {
        acc = acc + s.derivative_xi(v) * r.derivative_x(v);
        acc = acc - r.derivative_xi(v) * s.derivative_x(v);
    }
    return acc;
}

DiffOp DiffOp::constant(int nvars, const Scalar& c, int precision) {
    DiffOp p(nvars, precision);
    p.add_term(Exp(nvars, 0), TruncatedSeries::constant(nvars, c, precision));
    return p;
}

DiffOp DiffOp::partial(int nvars, int v, int precision) {
    DiffOp p(nvars, precision);
    Exp e(nvars, 0);
    e[v] = 1;
    p.add_term(e, TruncatedSeries::constant(nvars, Scalar(1), precision));
    return p;
}

DiffOp DiffOp::mult(const TruncatedSeries& f, bool dhat) {
    DiffOp p(f.nvars(), f.precision(), dhat);
    p.add_term(Exp(f.nvars(), 0), f);
    return p;
}

void DiffOp::add_term(const Exp& dop, const TruncatedSeries& coef) {
    if (coef.precision() < precision_) {
        precision_ = coef.precision();
        // Re-cut everything already stored to the lowered shared precision.
        TermMap old;
        old.swap(terms_);
        for (const auto& [e, c] : old) {
            TruncatedSeries t = c.truncated(precision_);
            if (!t.is_zero()) terms_.emplace(e, t);
        }
    }
    TruncatedSeries cut = coef.truncated(precision_);
    auto it = terms_.find(dop);
    if (it == terms_.end()) {
        if (!cut.is_zero()) terms_.emplace(dop, cut);
    } else {
        it->second = it->second + cut;
        if (it->second.is_zero()) terms_.erase(it);
    }
}

DiffOp DiffOp::operator-() const {
    DiffOp r(nvars_, precision_, dhat_);
    for (const auto& [e, c] : terms_) r.terms_.emplace(e, -c);
    return r;
}

DiffOp DiffOp::scaled(const Scalar& c) const {
    DiffOp r(nvars_, precision_, dhat_);
    if (c.is_zero()) return r;
    for (const auto& [e, k] : terms_) r.terms_.emplace(e, k.scaled(c));
    return r;
}

DiffOp operator+(const DiffOp& a, const DiffOp& b) {
    DiffOp r(a.nvars(), std::min(a.precision(), b.precision()), a.dhat() || b.dhat());
    for (const auto& [e, c] : a.terms()) r.add_term(e, c);
    for (const auto& [e, c] : b.terms()) r.add_term(e, c);
    return r;
}

DiffOp operator-(const DiffOp& a, const DiffOp& b) {
    return a + (-b);
}

bool DiffOp::agrees_with(const DiffOp& o) const {
    DiffOp d = *this - o;
    return d.is_zero();
}

namespace {

// Iterates over all gamma with 0 <= gamma <= alpha componentwise.
bool next_sub_index(Exp& gamma, const Exp& alpha) {
    for (std::size_t i = 0; i < gamma.size(); ++i) {
        if (gamma[i] < alpha[i]) {
            ++gamma[i];
            for (std::size_t j = 0; j < i; ++j) gamma[j] = 0;
            return true;
        }
    }
    return false;
}

Scalar multi_binomial(const Exp& alpha, const Exp& gamma) {
    Scalar b(1);
    for (std::size_t i = 0; i < alpha.size(); ++i)
        b *= binomial(static_cast<unsigned long>(alpha[i]), static_cast<unsigned long>(gamma[i]));
    return b;
}

TruncatedSeries iterated_derivative(TruncatedSeries f, const Exp& gamma) {
    for (std::size_t v = 0; v < gamma.size(); ++v)
        for (int k = 0; k < gamma[v]; ++k) f = f.derivative(static_cast<int>(v));
    return f;
}

}  // namespace

DiffOp op_mul(const DiffOp& p, const DiffOp& q) {
    int n = p.nvars();
    // Precision floor across every contribution, tracked even when sums
    // cancel, so an all-zero product still reports an honest precision.
    int prec = std::min(p.precision(), q.precision());
    std::map<Exp, TruncatedSeries, GradedLexLess> sums;
    for (const auto& [alpha, c] : p.terms()) {
        for (const auto& [beta, d] : q.terms()) {
            Exp gamma(n, 0);
            do {
                TruncatedSeries dg = iterated_derivative(d, gamma);
                TruncatedSeries contrib = (c * dg).scaled(multi_binomial(alpha, gamma));
                prec = std::min(prec, contrib.precision());
                Exp target = exp_add(exp_sub(alpha, gamma), beta);
                auto it = sums.find(target);
                if (it == sums.end())
                    sums.emplace(target, contrib);
                else
                    it->second = it->second + contrib;
            } while (next_sub_index(gamma, alpha));
        }
    }
    if (prec != kExact && prec <= 0) throw PrecisionExhausted();
    DiffOp r(n, prec, p.dhat() || q.dhat());
    for (const auto& [e, c] : sums) r.add_term(e, c);
    return r;
}

DiffOp op_commutator(const DiffOp& p, const DiffOp& q) {
    DiffOp c = op_mul(p, q) - op_mul(q, p);
    if (!p.is_zero() && !q.is_zero() && !c.is_zero()) {
        int top = order_of(p) + order_of(q) - 1;
        assert(order_of(c) <= top);
        (void)top;
    }
    return c;
}

int order_of(const DiffOp& p, OrderKind kind) {
    if (p.is_zero()) {
        if (p.precision() == kExact) throw ZeroOperator();
        throw PrecisionZero();
    }
    if (kind == OrderKind::kRaw) return total_degree(p.terms().rbegin()->first);
    int best = -1;
    for (const auto& [e, c] : p.terms())
        if (c.ord_lower_bound() == 0) best = std::max(best, total_degree(e));
    return best >= 0 ? best : total_degree(p.terms().rbegin()->first);
}

SymbolPoly principal_symbol(const DiffOp& p, OrderKind kind) {
    return grade_component(p, order_of(p, kind));
}

SymbolPoly grade_component(const DiffOp& p, int grade) {
    SymbolPoly s(p.nvars(), p.precision());
    for (const auto& [e, c] : p.terms())
        if (total_degree(e) == grade) s.add_term(e, c);
    return s;
}

Poly symbol_image(const SymbolPoly& s) {
    return s.image_at_x_zero();
}

TruncatedSeries apply(const DiffOp& p, const TruncatedSeries& f) {
    int prec = std::min(p.precision(), f.precision());
    TruncatedSeries acc(p.nvars(), prec);
    bool any = false;
    for (const auto& [alpha, c] : p.terms()) {
        TruncatedSeries contrib = c * iterated_derivative(f, alpha);
        prec = std::min(prec, contrib.precision());
        acc = acc + contrib;
        any = true;
    }
    if (prec != kExact && prec <= 0) throw PrecisionExhausted();
    return any ? acc.truncated(prec) : TruncatedSeries(p.nvars(), prec);
}

DiffOp normal_ordered_exp(int nvars, int precision) {
    if (nvars < 1) throw Error("normal_ordered_exp needs at least one variable");
    if (precision == kExact) throw Error("normal_ordered_exp needs a finite precision");
    DiffOp e(nvars, precision, true);
    Scalar sign(1);
    for (int k = 0; k < precision; ++k) {
        Exp xk(nvars, 0), dk(nvars, 0);
        xk[0] = k;
        dk[0] = k;
        Poly coef = Poly::monomial(nvars, xk, sign / factorial(static_cast<unsigned>(k)));
        e.add_term(dk, TruncatedSeries(coef, precision));
        sign = -sign;
    }
    return e;
}

std::string DiffOp::str(const std::vector<std::string>& x_names) const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        if (!first) out << " + ";
        first = false;
        out << "(" << it->second.body().str(x_names) << ")";
        for (int v = 0; v < nvars_; ++v) {
            if (it->first[v] == 0) continue;
            out << "*d" << (v + 1);
            if (it->first[v] > 1) out << "^" << it->first[v];
        }
    }
    if (precision_ != kExact) out << " + O(M^" << precision_ << ")";
    return out.str();
}

}  // namespace pdo
