#include "pdo/spectral.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "pdo/linalg.hpp"

namespace pdo {

namespace {

using SpanRow = SparseSpan<Exp, GradedLexLess>::Row;

SpanRow poly_row(const Poly& p) {
    SpanRow r;
    for (const auto& [e, c] : p.terms()) r.emplace(e, c);
    return r;
}

bool series_is_constant(const TruncatedSeries& c) {
    for (const auto& [e, v] : c.body().terms())
        if (total_degree(e) > 0) return false;
    return true;
}

// Calls f(a, value) for every exponent vector a != 0 with
// sum a_i * w_i <= bound (all w_i >= 1).
void enumerate_weighted(const std::vector<int>& w, int bound,
                        const std::function<void(const std::vector<int>&, int)>& f) {
    std::vector<int> a(w.size(), 0);
    std::function<void(std::size_t, int)> rec = [&](std::size_t pos, int used) {
        if (pos == w.size()) {
            if (used > 0) f(a, used);
            return;
        }
        for (int k = 0; used + k * w[pos] <= bound; ++k) {
            a[pos] = k;
            rec(pos + 1, used + k * w[pos]);
        }
        a[pos] = 0;
    };
    rec(0, 0);
}

// Memoized products of symbol powers: a -> prod sym_i^{a_i}.
class PowerCache {
  public:
    explicit PowerCache(std::vector<Poly> gens) : gens_(std::move(gens)) {}

    const Poly& product(const std::vector<int>& a) {
        auto it = cache_.find(a);
        if (it != cache_.end()) return it->second;
        Poly value(gens_.empty() ? 0 : gens_[0].nvars());
        std::size_t i = 0;
        while (i < a.size() && a[i] == 0) ++i;
        if (i == a.size()) {
            value = Poly::constant(gens_.empty() ? 0 : gens_[0].nvars(), Scalar(1));
        } else {
            std::vector<int> prev = a;
            --prev[i];
            value = product(prev) * gens_[i];
        }
        return cache_.emplace(std::move(std::vector<int>(a)), std::move(value))
            .first->second;
    }

  private:
    std::vector<Poly> gens_;
    std::map<std::vector<int>, Poly> cache_;
};

// Grade-by-grade spans of the symbol algebra, with the independent product
// polynomials recorded per grade (used as working bases downstream).
struct GradeData {
    std::map<int, SparseSpan<Exp, GradedLexLess>> spans;
    std::map<int, std::vector<Poly>> basis;

    int rank_at(int j) const {
        auto it = spans.find(j);
        return it == spans.end() ? 0 : static_cast<int>(it->second.rank());
    }
};

GradeData build_grades(const std::vector<Poly>& symbols,
                       const std::vector<int>& orders, int mmax) {
    std::vector<Poly> gens;
    std::vector<int> w;
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (orders[i] >= 1) {
            gens.push_back(symbols[i]);
            w.push_back(orders[i]);
        }
    }
    GradeData data;
    if (gens.empty()) return data;
    PowerCache cache(gens);
    enumerate_weighted(w, mmax, [&](const std::vector<int>& a, int value) {
        const Poly& p = cache.product(a);
        if (p.is_zero()) return;
        if (data.spans[value].insert(poly_row(p))) data.basis[value].push_back(p);
    });
    return data;
}

std::vector<Scalar> binary_form_coeffs(const Poly& f, int deg) {
    // Coefficient of xi1^{deg-k} xi2^k, k = 0..deg.
    std::vector<Scalar> out(static_cast<std::size_t>(deg) + 1, Scalar(0));
    for (const auto& [e, c] : f.terms()) {
        if (e.size() != 2 || e[0] + e[1] != deg) continue;
        out[static_cast<std::size_t>(e[1])] = c;
    }
    return out;
}

Scalar dense_det(std::vector<std::vector<Scalar>> m) {
    const std::size_t n = m.size();
    Scalar det(1);
    for (std::size_t col = 0; col < n; ++col) {
        std::size_t piv = col;
        while (piv < n && m[piv][col].is_zero()) ++piv;
        if (piv == n) return Scalar(0);
        if (piv != col) {
            std::swap(m[piv], m[col]);
            det = -det;
        }
        det = det * m[col][col];
        Scalar inv = inverse(m[col][col]);
        for (std::size_t r = col + 1; r < n; ++r) {
            if (m[r][col].is_zero()) continue;
            Scalar f = m[r][col] * inv;
            for (std::size_t c = col; c < n; ++c)
                m[r][c] = m[r][c] - f * m[col][c];
        }
    }
    return det;
}

Scalar sylvester_resultant(const Poly& f, int df, const Poly& g, int dg) {
    std::vector<Scalar> a = binary_form_coeffs(f, df);
    std::vector<Scalar> b = binary_form_coeffs(g, dg);
    const std::size_t n = static_cast<std::size_t>(df + dg);
    std::vector<std::vector<Scalar>> m(n, std::vector<Scalar>(n, Scalar(0)));
    for (int r = 0; r < dg; ++r)
        for (int k = 0; k <= df; ++k) m[r][r + k] = a[static_cast<std::size_t>(k)];
    for (int r = 0; r < df; ++r)
        for (int k = 0; k <= dg; ++k)
            m[static_cast<std::size_t>(dg + r)][r + k] = b[static_cast<std::size_t>(k)];
    return dense_det(std::move(m));
}

// ---- sampled common-zero search over F_p for three or more variables ----

std::int64_t mod_pow(std::int64_t base, std::int64_t e, std::int64_t p) {
    std::int64_t r = 1 % p;
    base %= p;
    if (base < 0) base += p;
    while (e > 0) {
        if (e & 1) r = r * base % p;
        base = base * base % p;
        e >>= 1;
    }
    return r;
}

// Scalar reduced mod p, or nullopt when the denominator vanishes mod p.
std::optional<std::int64_t> scalar_mod(const Scalar& s, std::int64_t p) {
    mpz_class num = s.raw().get_num(), den = s.raw().get_den();
    mpz_class pz = static_cast<long>(p);
    mpz_class nm = num % pz, dm = den % pz;
    std::int64_t n = nm.get_si(), d = dm.get_si();
    n = ((n % p) + p) % p;
    d = ((d % p) + p) % p;
    if (d == 0) return std::nullopt;
    return n * mod_pow(d, p - 2, p) % p;
}

struct ModPoly {
    // term list: (exponent, value mod p)
    std::vector<std::pair<Exp, std::int64_t>> terms;
};

std::optional<ModPoly> poly_mod(const Poly& f, std::int64_t p) {
    ModPoly out;
    for (const auto& [e, c] : f.terms()) {
        auto v = scalar_mod(c, p);
        if (!v) return std::nullopt;
        if (*v != 0) out.terms.emplace_back(e, *v);
    }
    return out;
}

std::int64_t eval_mod(const ModPoly& f, const std::vector<std::int64_t>& x,
                      std::int64_t p) {
    std::int64_t acc = 0;
    for (const auto& [e, c] : f.terms) {
        std::int64_t t = c;
        for (std::size_t i = 0; i < e.size(); ++i)
            if (e[i] > 0) t = t * mod_pow(x[i], e[i], p) % p;
        acc = (acc + t) % p;
    }
    return acc;
}

// True when a common projective F_p-zero of the forms exists.
std::optional<bool> common_zero_mod(const std::vector<Poly>& forms, int nvars,
                                    std::int64_t p) {
    std::vector<ModPoly> fs;
    for (const auto& f : forms) {
        auto m = poly_mod(f, p);
        if (!m) return std::nullopt;  // prime unusable
        fs.push_back(std::move(*m));
    }
    // Charts: first nonzero coordinate normalized to 1.
    for (int chart = 0; chart < nvars; ++chart) {
        std::vector<std::int64_t> x(static_cast<std::size_t>(nvars), 0);
        x[static_cast<std::size_t>(chart)] = 1;
        const int free = nvars - chart - 1;
        std::vector<std::int64_t> idx(static_cast<std::size_t>(std::max(free, 0)), 0);
        while (true) {
            for (int i = 0; i < free; ++i)
                x[static_cast<std::size_t>(chart + 1 + i)] = idx[static_cast<std::size_t>(i)];
            bool all = true;
            for (const auto& f : fs)
                if (eval_mod(f, x, p) != 0) {
                    all = false;
                    break;
                }
            if (all) return true;
            int i = free - 1;
            while (i >= 0 && idx[static_cast<std::size_t>(i)] == p - 1) {
                idx[static_cast<std::size_t>(i)] = 0;
                --i;
            }
            if (i < 0) break;
            ++idx[static_cast<std::size_t>(i)];
        }
    }
    return false;
}

Poly det_poly(const std::vector<std::vector<Poly>>& m, std::vector<int> cols,
              std::size_t row, int nvars) {
    if (cols.empty()) return Poly::constant(nvars, Scalar(1));
    Poly acc(nvars);
    for (std::size_t k = 0; k < cols.size(); ++k) {
        const Poly& entry = m[row][static_cast<std::size_t>(cols[k])];
        if (entry.is_zero()) continue;
        std::vector<int> rest;
        for (std::size_t j = 0; j < cols.size(); ++j)
            if (j != k) rest.push_back(cols[j]);
        Poly minor = det_poly(m, rest, row + 1, nvars);
        Poly term = entry * minor;
        if (k % 2 == 1) term = term.scaled(Scalar(-1));
        acc = acc + term;
    }
    return acc;
}

std::vector<std::vector<int>> combinations(int p, int n) {
    std::vector<std::vector<int>> out;
    std::vector<int> cur;
    std::function<void(int)> rec = [&](int start) {
        if (static_cast<int>(cur.size()) == n) {
            out.push_back(cur);
            return;
        }
        for (int i = start; i < p; ++i) {
            cur.push_back(i);
            rec(i + 1);
            cur.pop_back();
        }
    };
    rec(0);
    return out;
}

}  // namespace

RingPresentation make_ring(std::vector<DiffOp> gens) {
    if (gens.empty()) throw ZeroInput("a ring presentation needs at least one generator");
    const int n = gens[0].nvars();
    int prec = kExact;
    for (const auto& g : gens) {
        if (g.nvars() != n)
            throw Error("generators live in different variable counts");
        prec = std::min(prec, g.precision());
    }
    for (std::size_t i = 0; i < gens.size(); ++i)
        for (std::size_t j = i + 1; j < gens.size(); ++j) {
            DiffOp c = op_commutator(gens[i], gens[j]);
            prec = std::min(prec, c.precision());
            if (!c.is_zero()) {
                std::ostringstream msg;
                msg << "generators " << i + 1 << " and " << j + 1
                    << " do not commute at precision " << c.precision();
                throw CommutationFailed(msg.str());
            }
        }
    RingPresentation ring;
    ring.nvars = n;
    ring.certified_precision = prec;
    ring.generators = std::move(gens);
    return ring;
}

int spectral_order(const DiffOp& op) { return order_of(op, OrderKind::kSymbolStable); }

Poly reduced_symbol(const DiffOp& op) {
    const int i = spectral_order(op);
    if (op.precision() < 1) throw PrecisionZero();
    Poly out(op.nvars());
    for (const auto& [alpha, c] : op.terms()) {
        const int ad = total_degree(alpha);
        const int weight = ad - c.ord_lower_bound();
        if (weight > i)
            throw NonConstantSymbol("term of weight above the spectral order");
        if (weight == i) {
            if (ad != i || !series_is_constant(c))
                throw NonConstantSymbol(
                    "top-weight part has x-dependent coefficients");
            out = out + Poly::monomial(op.nvars(), alpha, c.body().constant_term());
        }
    }
    if (out.is_zero() && i != 0)
        throw NonConstantSymbol("no constant top-order part at this precision");
    return out;
}

SymbolCheck check_symbol_condition(const std::vector<DiffOp>& family) {
    SymbolCheck out;
    if (family.empty()) throw ZeroInput("empty operator family");
    const int n = family[0].nvars();
    if (static_cast<int>(family.size()) != n)
        throw Error("symbol condition needs exactly one operator per variable");
    std::vector<Poly> symbols;
    std::vector<int> degs;
    try {
        for (const auto& op : family) {
            symbols.push_back(reduced_symbol(op));
            degs.push_back(spectral_order(op));
        }
        out.constant_symbols = true;
    } catch (const NonConstantSymbol& e) {
        out.note = e.what();
        return out;
    }
    for (std::size_t i = 0; i < symbols.size(); ++i) {
        if (symbols[i].is_zero()) {
            out.note = "zero principal symbol";
            return out;
        }
        if (degs[i] == 0) {
            // A unit: the family can have no common zero.
            out.no_common_zero = true;
            out.exact = true;
            out.resultant = Scalar(1);
            out.note = "order-zero generator is a unit";
            return out;
        }
    }
    if (n == 2) {
        out.resultant = sylvester_resultant(symbols[0], degs[0], symbols[1], degs[1]);
        out.no_common_zero = !out.resultant.is_zero();
        out.exact = true;
        out.note = out.no_common_zero
                       ? "resultant certificate: no common projective zero"
                       : "resultant vanishes: common projective zero exists";
        return out;
    }
    // Three or more variables: sampled check over small prime fields.
    bool found = false;
    int primes_used = 0;
    for (std::int64_t p : {101, 103, 107}) {
        auto res = common_zero_mod(symbols, n, p);
        if (!res) continue;
        ++primes_used;
        if (*res) {
            found = true;
            break;
        }
    }
    out.no_common_zero = primes_used > 0 && !found;
    out.exact = false;
    out.note = found ? "common rational zero found modulo a sampled prime"
                     : (primes_used > 0
                            ? "no common rational zero modulo sampled primes "
                              "(heuristic verdict)"
                            : "no usable sampling prime");
    return out;
}

Poly symbol_jacobian(const std::vector<DiffOp>& family) {
    if (family.empty()) throw ZeroInput("empty operator family");
    const int n = family[0].nvars();
    if (static_cast<int>(family.size()) != n)
        throw Error("Jacobian needs exactly one operator per variable");
    std::vector<std::vector<Poly>> m;
    for (const auto& op : family) {
        Poly s = reduced_symbol(op);
        std::vector<Poly> row;
        for (int j = 0; j < n; ++j) row.push_back(s.derivative(j));
        m.push_back(std::move(row));
    }
    std::vector<int> cols(static_cast<std::size_t>(n));
    std::iota(cols.begin(), cols.end(), 0);
    return det_poly(m, cols, 0, n);
}

int poly_matrix_rank(std::vector<std::vector<Poly>> m) {
    if (m.empty()) return 0;
    const std::size_t rows = m.size(), cols = m[0].size();
    std::size_t rank = 0;
    std::vector<bool> used(rows, false);
    for (std::size_t c = 0; c < cols && rank < rows; ++c) {
        std::size_t piv = rows;
        for (std::size_t r = 0; r < rows; ++r)
            if (!used[r] && !m[r][c].is_zero()) {
                piv = r;
                break;
            }
        if (piv == rows) continue;
        used[piv] = true;
        ++rank;
        for (std::size_t r = 0; r < rows; ++r) {
            if (r == piv || m[r][c].is_zero()) continue;
            // row_r := row_r * pivot_entry - pivot_row * entry  (fraction-free)
            Poly e = m[r][c];
            for (std::size_t k = 0; k < cols; ++k)
                m[r][k] = m[r][k] * m[piv][c] - m[piv][k] * e;
        }
    }
    return static_cast<int>(rank);
}

FiltrationTable graded_dims(const std::vector<DiffOp>& gens, int mmax) {
    if (mmax < 0) throw Error("negative degree bound");
    std::vector<Poly> symbols;
    std::vector<int> orders;
    for (const auto& g : gens) {
        symbols.push_back(reduced_symbol(g));
        orders.push_back(spectral_order(g));
    }
    GradeData data = build_grades(symbols, orders, mmax);
    FiltrationTable table;
    table.dims.assign(static_cast<std::size_t>(mmax) + 1, 0);
    int acc = 1;  // the constants
    table.dims[0] = acc;
    int g = 0;
    for (int m = 1; m <= mmax; ++m) {
        int r = data.rank_at(m);
        if (r > 0) g = std::gcd(g, m);
        acc += r;
        table.dims[static_cast<std::size_t>(m)] = acc;
    }
    table.delta = g == 0 ? 1 : g;
    return table;
}

int veronese_degree(const std::vector<Poly>& symbols,
                    const std::vector<int>& orders, int mmax, int dmax) {
    GradeData data = build_grades(symbols, orders, mmax);
    const int nvars = symbols.empty() ? 0 : symbols[0].nvars();
    for (int d = 1; d <= dmax; ++d) {
        // U_g = span of products of graded pieces of degree <= d; compare
        // against the full graded piece V_g for every g through mmax.
        std::map<int, std::vector<Poly>> ubasis;
        ubasis[0] = {Poly::constant(nvars, Scalar(1))};
        bool ok = true;
        for (int g = 1; g <= mmax && ok; ++g) {
            SparseSpan<Exp, GradedLexLess> span;
            std::vector<Poly> basis;
            for (int i = 1; i <= std::min(d, g); ++i) {
                auto vit = data.basis.find(i);
                if (vit == data.basis.end()) continue;
                auto uit = ubasis.find(g - i);
                if (uit == ubasis.end()) continue;
                for (const Poly& f : vit->second)
                    for (const Poly& u : uit->second) {
                        Poly prod = f * u;
                        if (span.insert(poly_row(prod))) basis.push_back(prod);
                    }
            }
            if (static_cast<int>(span.rank()) != data.rank_at(g)) ok = false;
            if (!basis.empty()) ubasis.emplace(g, std::move(basis));
        }
        if (ok) return d;
    }
    return 0;
}

SelfIntersection self_intersection(const FiltrationTable& table, int mlo,
                                   int mhi, int preferred_period) {
    SelfIntersection out;
    bool fitted = false;
    if (preferred_period > 0) {
        try {
            out.leading = quasi_leading(table.dims, mlo, mhi, 2, preferred_period);
            out.period = preferred_period;
            fitted = true;
        } catch (const NotStabilized&) {
        }
    }
    if (!fitted) {
        auto [c, q] = quasi_leading_auto(table.dims, mlo, mhi, 2, 12);
        out.leading = c;
        out.period = q;
    }
    out.c2 = Scalar(2) * out.leading;
    if (out.c2.is_zero())
        throw NotStabilized("vanishing leading coefficient on the fit window");
    out.rank = inverse(out.c2);
    return out;
}

std::vector<std::pair<Poly, int>> rees_generator_degrees(
    const std::vector<DiffOp>& gens, int mmax) {
    std::vector<Poly> symbols;
    std::vector<int> orders;
    for (const auto& g : gens) {
        symbols.push_back(reduced_symbol(g));
        orders.push_back(spectral_order(g));
    }
    GradeData data = build_grades(symbols, orders, mmax);
    std::vector<std::pair<Poly, int>> chosen;
    for (int j = 1; j <= mmax; ++j) {
        auto vit = data.basis.find(j);
        if (vit == data.basis.end()) continue;
        // Span of degree-j products of the generators already chosen.
        SparseSpan<Exp, GradedLexLess> span;
        if (!chosen.empty()) {
            std::vector<Poly> cg;
            std::vector<int> cw;
            for (const auto& [p, d] : chosen) {
                cg.push_back(p);
                cw.push_back(d);
            }
            PowerCache cache(cg);
            enumerate_weighted(cw, j, [&](const std::vector<int>& a, int value) {
                if (value == j) span.insert(poly_row(cache.product(a)));
            });
        }
        for (const Poly& cand : vit->second)
            if (span.insert(poly_row(cand))) chosen.emplace_back(cand, j);
    }
    return chosen;
}

Poly l_project(const DiffOp& op) {
    if (op.precision() < 1) throw PrecisionZero();
    Poly out(op.nvars());
    for (const auto& [alpha, c] : op.terms())
        out = out + Poly::monomial(op.nvars(), alpha, c.body().constant_term());
    return out;
}

Poly l_act(const Poly& v, const DiffOp& op, int nvars) {
    DiffOp lift(nvars, kExact);
    for (const auto& [e, c] : v.terms())
        lift.add_term(e, TruncatedSeries(Poly::constant(nvars, c), kExact));
    if (lift.is_zero()) return Poly(nvars);
    return l_project(op_mul(lift, op));
}

std::vector<int> l_filtration_dims(int nvars, int mmax) {
    std::vector<DiffOp> gens;
    for (int i = 0; i < nvars; ++i) gens.push_back(DiffOp::partial(nvars, i));
    for (int i = 0; i < nvars; ++i)
        gens.push_back(DiffOp::mult(
            TruncatedSeries(Poly::variable(nvars, i), kExact)));
    SparseSpan<Exp, GradedLexLess> span;
    std::vector<Poly> frontier;
    Poly one = Poly::constant(nvars, Scalar(1));
    span.insert(poly_row(one));
    frontier.push_back(one);
    std::vector<int> dims;
    dims.push_back(static_cast<int>(span.rank()));
    for (int step = 1; step <= mmax; ++step) {
        std::vector<Poly> next;
        for (const Poly& v : frontier)
            for (const auto& g : gens) {
                Poly w = l_act(v, g, nvars);
                if (!w.is_zero() && span.insert(poly_row(w))) next.push_back(w);
            }
        dims.push_back(static_cast<int>(span.rank()));
        frontier = std::move(next);
    }
    return dims;
}

SpectralReport analyze_ring(const std::vector<DiffOp>& gens,
                            const SpectralConfig& cfg) {
    RingPresentation ring = make_ring(gens);
    SpectralReport rep;
    rep.nvars = ring.nvars;
    rep.certified_precision = ring.certified_precision;
    for (const auto& g : ring.generators) {
        rep.orders.push_back(spectral_order(g));
        rep.symbols.push_back(reduced_symbol(g));
    }
    const int n = ring.nvars;
    const int p = static_cast<int>(ring.generators.size());
    if (p >= n) {
        bool first = true;
        for (const auto& combo : combinations(p, n)) {
            std::vector<DiffOp> family;
            for (int i : combo) family.push_back(ring.generators[static_cast<std::size_t>(i)]);
            SymbolCheck check = check_symbol_condition(family);
            bool jac = false;
            if (check.constant_symbols) jac = !symbol_jacobian(family).is_zero();
            if (first) {
                rep.symbol_check = check;
                rep.jacobian_nonzero = jac;
                first = false;
            }
            if (check.constant_symbols && check.no_common_zero && jac) {
                rep.symbol_check = check;
                rep.jacobian_nonzero = true;
                rep.subfamily = combo;
                break;
            }
        }
    } else {
        rep.symbol_check.note = "fewer generators than variables";
    }
    {
        std::vector<std::vector<Poly>> jac;
        for (const auto& s : rep.symbols) {
            std::vector<Poly> row;
            for (int j = 0; j < n; ++j) row.push_back(s.derivative(j));
            jac.push_back(std::move(row));
        }
        rep.trdeg = poly_matrix_rank(std::move(jac));
    }
    rep.table = graded_dims(ring.generators, cfg.mmax);
    rep.veronese_d = veronese_degree(rep.symbols, rep.orders, cfg.mmax, cfg.dmax);
    const int lo = cfg.window_lo > 0 ? cfg.window_lo : std::max(2, cfg.mmax / 2);
    const int hi = cfg.window_hi > 0 ? cfg.window_hi : cfg.mmax;
    const int preferred = rep.veronese_d > 0 ? rep.table.delta * rep.veronese_d : 0;
    rep.intersection = self_intersection(rep.table, lo, hi, preferred);
    rep.generator_degrees = rees_generator_degrees(ring.generators, cfg.mmax);
    if (cfg.supplied_rank)
        rep.coherent = (rep.intersection.c2 * (*cfg.supplied_rank) == Scalar(1));
    return rep;
}

}  // namespace pdo
