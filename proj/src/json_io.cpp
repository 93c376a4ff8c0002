#include "pdo/json_io.hpp"

namespace pdo {

namespace {

void require(bool ok, const char* what) {
    if (!ok) throw ParseError(std::string("bad JSON encoding: ") + what);
}

}  // namespace

Json scalar_to_json(const Scalar& s) {
    return Json{{"num", s.num_string()}, {"den", s.den_string()}};
}

Scalar scalar_from_json(const Json& j) {
    require(j.contains("num") && j.contains("den"), "scalar needs num/den strings");
    return Scalar::from_decimal_strings(j["num"].get<std::string>(), j["den"].get<std::string>());
}

Json poly_to_json(const Poly& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["exp"] = e;
        t["num"] = c.num_string();
        t["den"] = c.den_string();
        terms.push_back(std::move(t));
    }
    return Json{{"nvars", p.nvars()}, {"terms", std::move(terms)}};
}

Poly poly_from_json(const Json& j) {
    require(j.contains("nvars") && j.contains("terms"), "poly needs nvars and terms");
    Poly p(j["nvars"].get<int>());
    for (const auto& t : j["terms"]) {
        Exp e = t["exp"].get<Exp>();
        require(static_cast<int>(e.size()) == p.nvars(), "exponent arity mismatch");
        p.add_term(e, Scalar::from_decimal_strings(t["num"].get<std::string>(),
                                                   t["den"].get<std::string>()));
    }
    return p;
}

Json series_to_json(const TruncatedSeries& f) {
    Json j = poly_to_json(f.body());
    j["precision"] = f.precision();
    return j;
}

TruncatedSeries series_from_json(const Json& j) {
    require(j.contains("precision"), "series needs a precision");
    return TruncatedSeries(poly_from_json(j), j["precision"].get<int>());
}

Json ut_to_json(const UTLaurent& f) {
    Json terms = Json::array();
    for (const auto& [k, c] : f.terms()) {
        Json t;
        t["u"] = k.second;
        t["t"] = k.first;
        t["num"] = c.num_string();
        t["den"] = c.den_string();
        terms.push_back(std::move(t));
    }
    const Window& w = f.window();
    return Json{{"terms", std::move(terms)},
                {"window", Json{{"tmin", w.tmin}, {"tmax", w.tmax}, {"umax", w.umax}}}};
}

UTLaurent ut_from_json(const Json& j) {
    require(j.contains("window") && j.contains("terms"), "ut element needs terms and window");
    const Json& wj = j["window"];
    Window w{wj["tmin"].get<int>(), wj["tmax"].get<int>(), wj["umax"].get<int>()};
    std::vector<std::pair<UTLaurent::Key, Scalar>> terms;
    for (const auto& t : j["terms"])
        terms.push_back({{t["t"].get<int>(), t["u"].get<int>()},
                         Scalar::from_decimal_strings(t["num"].get<std::string>(),
                                                      t["den"].get<std::string>())});
    return UTLaurent::make(w, terms);
}

Json op_to_json(const DiffOp& p) {
    Json terms = Json::array();
    for (const auto& [e, c] : p.terms()) {
        Json t;
        t["dop"] = e;
        t["coef"] = series_to_json(c);
        terms.push_back(std::move(t));
    }
    return Json{{"nvars", p.nvars()},
                {"precision", p.precision()},
                {"dhat", p.dhat()},
                {"terms", std::move(terms)}};
}

DiffOp op_from_json(const Json& j) {
    require(j.contains("nvars") && j.contains("precision") && j.contains("terms"),
            "operator needs nvars, precision and terms");
    DiffOp p(j["nvars"].get<int>(), j["precision"].get<int>(),
             j.value("dhat", false));
    for (const auto& t : j["terms"]) {
        Exp e = t["dop"].get<Exp>();
        require(static_cast<int>(e.size()) == p.nvars(), "dop arity mismatch");
        p.add_term(e, series_from_json(t["coef"]));
    }
    return p;
}

}  // namespace pdo
