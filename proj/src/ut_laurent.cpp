#include "pdo/ut_laurent.hpp"

#include <algorithm>
#include <sstream>

namespace pdo {

UTLaurent UTLaurent::make(const Window& w, const std::vector<std::pair<Key, Scalar>>& terms) {
    UTLaurent f(w);
    for (const auto& [key, c] : terms) {
        auto [texp, uexp] = key;
        if (!w.contains(uexp, texp))
            throw WindowTooSmall("term u^" + std::to_string(uexp) + " t^" + std::to_string(texp) +
                                 " lies outside the declared window");
        f.add_term(uexp, texp, c);
    }
    return f;
}

UTLaurent UTLaurent::monomial(const Window& w, int uexp, int texp, const Scalar& c) {
    return make(w, {{{texp, uexp}, c}});
}

void UTLaurent::clip() {
    for (auto it = terms_.begin(); it != terms_.end();) {
        auto [texp, uexp] = it->first;
        if (!window_.contains(uexp, texp))
            it = terms_.erase(it);
        else
            ++it;
    }
}

UTLaurent UTLaurent::operator-() const {
    UTLaurent r(window_);
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, -c);
    return r;
}

UTLaurent UTLaurent::scaled(const Scalar& s) const {
    UTLaurent r(window_);
    if (s.is_zero()) return r;
    for (const auto& [k, c] : terms_) r.terms_.emplace(k, c * s);
    return r;
}

UTLaurent operator+(const UTLaurent& a, const UTLaurent& b) {
    Window w{std::min(a.window().tmin, b.window().tmin),
             std::min(a.window().tmax, b.window().tmax),
             std::min(a.window().umax, b.window().umax)};
    UTLaurent r(w);
    for (const auto& [k, c] : a.terms()) r.add_term(k.second, k.first, c);
    for (const auto& [k, c] : b.terms()) r.add_term(k.second, k.first, c);
    r.clip();
    return r;
}

UTLaurent operator-(const UTLaurent& a, const UTLaurent& b) {
    return a + (-b);
}

UTValuation ut_valuation(const UTLaurent& f) {
    if (f.terms().empty()) throw ZeroInput("ut_valuation of zero element");
    auto [texp, uexp] = f.terms().begin()->first;  // t-major ascending order
    if (texp == f.window().tmin)
        throw WindowTooSmall("lowest nonzero t-level touches the window floor");
    return UTValuation{uexp, texp};
}

namespace {

UTLaurent ut_mul_impl(const UTLaurent& a, const UTLaurent& b, bool* dropped) {
    const Window& wa = a.window();
    const Window& wb = b.window();
    // For an empty factor fall back to its floor; the product is zero anyway.
    int tva = a.terms().empty() ? wa.tmin : a.terms().begin()->first.first;
    int tvb = b.terms().empty() ? wb.tmin : b.terms().begin()->first.first;
    int uva = 0, uvb = 0;
    if (!a.terms().empty()) {
        uva = a.terms().begin()->first.second;
        for (const auto& [k, c] : a.terms()) uva = std::min(uva, k.second);
    }
    if (!b.terms().empty()) {
        uvb = b.terms().begin()->first.second;
        for (const auto& [k, c] : b.terms()) uvb = std::min(uvb, k.second);
    }
    Window w{wa.tmin + wb.tmin,
             std::min(wa.tmax + tvb, wb.tmax + tva),
             std::min(wa.umax + uvb, wb.umax + uva)};
    if (w.tmin > w.tmax || w.umax < 0) throw EmptyResultWindow();
    // Accumulate exactly, then clip: a term outside the window counts as
    // dropped only when its accumulated coefficient is nonzero.
    std::map<UTLaurent::Key, Scalar> acc;
    for (const auto& [ka, ca] : a.terms())
        for (const auto& [kb, cb] : b.terms()) {
            UTLaurent::Key key{ka.first + kb.first, ka.second + kb.second};
            auto [it, fresh] = acc.emplace(key, ca * cb);
            if (!fresh) it->second += ca * cb;
        }
    std::vector<std::pair<UTLaurent::Key, Scalar>> kept;
    for (const auto& [key, c] : acc) {
        if (c.is_zero()) continue;
        if (w.contains(key.second, key.first))
            kept.emplace_back(key, c);
        else if (dropped)
            *dropped = true;
    }
    return UTLaurent::make(w, kept);
}

}  // namespace

UTLaurent ut_mul(const UTLaurent& a, const UTLaurent& b) {
    return ut_mul_impl(a, b, nullptr);
}

UTLaurent ut_mul_strict(const UTLaurent& a, const UTLaurent& b) {
    bool dropped = false;
    UTLaurent r = ut_mul_impl(a, b, &dropped);
    if (dropped)
        throw WindowTooSmall("product term falls outside the certified window");
    return r;
}

UTLaurent psi_map(const UTLaurent& f) {
    UTLaurent r(f.window());
    for (const auto& [k, c] : f.terms()) {
        auto [texp, uexp] = k;
        int t2 = texp + uexp;
        if (r.window().contains(uexp, t2)) r.add_term(uexp, t2, c);
    }
    return r;
}

UTLaurent psi1_map(const UTLaurent& f) {
    const Window& w = f.window();
    Window out{w.tmin - w.umax, w.tmax - w.umax, w.umax};
    UTLaurent r(out);
    for (const auto& [k, c] : f.terms()) {
        auto [texp, uexp] = k;
        int t2 = texp - uexp;
        if (out.contains(uexp, t2)) r.add_term(uexp, t2, c);
    }
    return r;
}

std::string UTLaurent::str() const {
    if (terms_.empty()) return "0";
    std::ostringstream out;
    bool first = true;
    for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
        auto [texp, uexp] = it->first;
        const Scalar& c = it->second;
        Scalar abs = c.sign() < 0 ? -c : c;
        if (first) {
            if (c.sign() < 0) out << "-";
            first = false;
        } else {
            out << (c.sign() < 0 ? " - " : " + ");
        }
        bool unit = abs.is_one();
        bool has_var = uexp != 0 || texp != 0;
        if (!unit || !has_var) out << abs.str();
        bool star = !unit && has_var;
        if (uexp != 0) {
            if (star) out << "*";
            star = true;
            out << "u";
            if (uexp != 1) out << "^" << uexp;
        }
        if (texp != 0) {
            if (star) out << "*";
            out << "t";
            if (texp != 1) out << "^" << texp;
        }
    }
    return out.str();
}

}  // namespace pdo
