#pragma once

// Exact rational scalars over GMP. Every value is kept in lowest terms with
// positive denominator (mpq canonical form); all arithmetic is exact.

#include <gmpxx.h>

#include <cstdint>
#include <stdexcept>
#include <string>

namespace pdo {

// Base class for every error this library throws.
struct Error : std::runtime_error {
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

struct ZeroConstantTerm : Error {
    ZeroConstantTerm() : Error("series has zero constant term, not invertible") {}
};
struct ZeroInput : Error {
    explicit ZeroInput(const std::string& w = "input is zero") : Error(w) {}
};
struct WindowTooSmall : Error {
    explicit WindowTooSmall(const std::string& w = "window too small to certify the result") : Error(w) {}
};
struct EmptyResultWindow : Error {
    EmptyResultWindow() : Error("result window is empty") {}
};
struct PrecisionExhausted : Error {
    PrecisionExhausted() : Error("operation exhausted the available x-adic precision") {}
};
struct ZeroOperator : Error {
    ZeroOperator() : Error("operator is identically zero") {}
};
struct PrecisionZero : Error {
    PrecisionZero() : Error("operator is indistinguishable from zero at the stored precision") {}
};
struct NonConstantSymbol : Error {
    explicit NonConstantSymbol(const std::string& w = "principal symbol has x-dependence") : Error(w) {}
};
struct CommutationFailed : Error {
    explicit CommutationFailed(const std::string& w) : Error(w) {}
};
struct NotStabilized : Error {
    explicit NotStabilized(const std::string& w = "finite differences did not stabilize in the window") : Error(w) {}
};
struct NoRankFits : Error {
    explicit NoRankFits(const std::string& w = "no rank candidate fits the filtration dimensions") : Error(w) {}
};
struct BudgetExceeded : Error {
    explicit BudgetExceeded(const std::string& w = "search budget exceeded") : Error(w) {}
};
struct NoNoetherPair : Error {
    explicit NoNoetherPair(const std::string& w = "no Noether normalization pair found in the candidate set") : Error(w) {}
};
struct NoConductorFound : Error {
    explicit NoConductorFound(const std::string& w = "no nonzero conductor element within the degree budget") : Error(w) {}
};
struct ParseError : Error {
    explicit ParseError(const std::string& w) : Error(w) {}
};

// Exact rational number. Thin wrapper over mpq_class that guarantees the
// canonical-form invariants on every construction path.
class Scalar {
  public:
    Scalar() : v_(0) {}
    Scalar(long n) : v_(n) {}                    // NOLINT: implicit by design
    Scalar(long n, long d) : v_(n, d) {
        if (d == 0) throw Error("zero denominator");
        v_.canonicalize();
    }
    explicit Scalar(const mpq_class& q) : v_(q) { v_.canonicalize(); }
    explicit Scalar(const mpz_class& n) : v_(n) {}
    Scalar(const mpz_class& n, const mpz_class& d) : v_(n, d) {
        if (d == 0) throw Error("zero denominator");
        v_.canonicalize();
    }

    // Parses "num" or "num/den" with arbitrary-size decimal integers.
    static Scalar from_string(const std::string& s) {
        auto slash = s.find('/');
        try {
            if (slash == std::string::npos) return Scalar(mpz_class(s));
            return Scalar(mpz_class(s.substr(0, slash)), mpz_class(s.substr(slash + 1)));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational literal: " + s);
        }
    }
    static Scalar from_decimal_strings(const std::string& num, const std::string& den) {
        try {
            return Scalar(mpz_class(num), mpz_class(den));
        } catch (const std::invalid_argument&) {
            throw ParseError("bad rational encoding: " + num + "/" + den);
        }
    }

    bool is_zero() const { return v_ == 0; }
    bool is_one() const { return v_ == 1; }
    int sign() const { return sgn(v_); }

    std::string num_string() const { return v_.get_num().get_str(); }
    std::string den_string() const { return v_.get_den().get_str(); }
    // "n" or "n/d", for human-readable printing.
    std::string str() const {
        if (v_.get_den() == 1) return v_.get_num().get_str();
        return v_.get_num().get_str() + "/" + v_.get_den().get_str();
    }

    const mpq_class& raw() const { return v_; }

    Scalar operator-() const { return Scalar(mpq_class(-v_)); }
    Scalar& operator+=(const Scalar& o) { v_ += o.v_; return *this; }
    Scalar& operator-=(const Scalar& o) { v_ -= o.v_; return *this; }
    Scalar& operator*=(const Scalar& o) { v_ *= o.v_; return *this; }
    Scalar& operator/=(const Scalar& o) {
        if (o.is_zero()) throw Error("division by zero scalar");
        v_ /= o.v_;
        return *this;
    }

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
    friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.v_ == b.v_; }
    friend bool operator!=(const Scalar& a, const Scalar& b) { return a.v_ != b.v_; }
    friend bool operator<(const Scalar& a, const Scalar& b) { return a.v_ < b.v_; }

  private:
    mpq_class v_;
};

inline Scalar inverse(const Scalar& s) {
    if (s.is_zero()) throw Error("division by zero scalar");
    return Scalar(1) / s;
}

// n! as an exact scalar.
inline Scalar factorial(unsigned n) {
    mpz_class f;
    mpz_fac_ui(f.get_mpz_t(), n);
    return Scalar(f);
}

// Binomial coefficient C(n, k), exact.
inline Scalar binomial(unsigned long n, unsigned long k) {
    mpz_class b;
    mpz_bin_uiui(b.get_mpz_t(), n, k);
    return Scalar(b);
}

}  // namespace pdo
