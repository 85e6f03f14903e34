#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <memory>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qsb {

struct DomainError : std::domain_error {
    using std::domain_error::domain_error;
};

struct ParseError : std::runtime_error {
    using std::runtime_error::runtime_error;
};

// Exact rational. Values that fit in int64 num/den live inline; larger ones
// are promoted to a shared immutable mpq. The representation is canonical,
// so a value is small iff it fits.
class Rat {
public:
    Rat() = default;
    Rat(long long v) : n_(v) {}
    Rat(long long num, long long den);
    explicit Rat(const mpq_class& q);

    bool is_zero() const { return !big_ && n_ == 0; }
    bool is_one() const { return !big_ && n_ == 1 && d_ == 1; }
    bool is_integer() const;
    int sign() const;
    mpq_class to_mpq() const;

    Rat operator-() const;
    friend Rat operator+(const Rat& a, const Rat& b);
    friend Rat operator-(const Rat& a, const Rat& b);
    friend Rat operator*(const Rat& a, const Rat& b);
    friend Rat operator/(const Rat& a, const Rat& b);
    friend bool operator==(const Rat& a, const Rat& b);
    friend bool operator<(const Rat& a, const Rat& b);

    std::string str() const;
    static Rat parse(std::string_view s);
    std::size_t hash() const;

private:
    static Rat from_i128(__int128 num, __int128 den);
    long long n_ = 0, d_ = 1;
    std::shared_ptr<const mpq_class> big_;
};

// re + im*i over the rationals.
class GaussRat {
public:
    GaussRat() = default;
    GaussRat(long long v) : re_(v) {}
    GaussRat(Rat re, Rat im = Rat()) : re_(std::move(re)), im_(std::move(im)) {}
    static GaussRat i() { return GaussRat(Rat(0), Rat(1)); }

    const Rat& re() const { return re_; }
    const Rat& im() const { return im_; }
    bool is_zero() const { return re_.is_zero() && im_.is_zero(); }
    bool is_one() const { return re_.is_one() && im_.is_zero(); }
    bool is_real() const { return im_.is_zero(); }

    GaussRat operator-() const { return {-re_, -im_}; }
    GaussRat inv() const;
    GaussRat conj() const { return {re_, -im_}; }
    friend GaussRat operator+(const GaussRat& a, const GaussRat& b) { return {a.re_ + b.re_, a.im_ + b.im_}; }
    friend GaussRat operator-(const GaussRat& a, const GaussRat& b) { return {a.re_ - b.re_, a.im_ - b.im_}; }
    friend GaussRat operator*(const GaussRat& a, const GaussRat& b);
    friend GaussRat operator/(const GaussRat& a, const GaussRat& b) { return a * b.inv(); }
    GaussRat& operator+=(const GaussRat& b) { return *this = *this + b; }
    GaussRat& operator-=(const GaussRat& b) { return *this = *this - b; }
    GaussRat& operator*=(const GaussRat& b) { return *this = *this * b; }
    friend bool operator==(const GaussRat& a, const GaussRat& b) { return a.re_ == b.re_ && a.im_ == b.im_; }

    // "a", "bi", "a+bi"; parenthesized by callers when needed.
    std::string str() const;
    static GaussRat parse(std::string_view s);
    std::size_t hash() const { return re_.hash() * 1000003u ^ im_.hash(); }

private:
    Rat re_, im_;
};

// Laurent polynomial in u, terms sorted by ascending exponent, no zeros.
class UPoly {
public:
    struct Term {
        int e;
        GaussRat c;
    };

    UPoly() = default;
    UPoly(const GaussRat& c, int e = 0);
    static UPoly monomial(int e, const GaussRat& c = GaussRat(1)) { return UPoly(c, e); }
    static UPoly from_terms(std::vector<Term> terms);

    const std::vector<Term>& terms() const { return t_; }
    bool is_zero() const { return t_.empty(); }
    bool is_one() const { return t_.size() == 1 && t_[0].e == 0 && t_[0].c.is_one(); }
    bool is_monomial() const { return t_.size() == 1; }
    int min_exp() const { return t_.front().e; }
    int max_exp() const { return t_.back().e; }
    const GaussRat& lead() const { return t_.back().c; }
    GaussRat coeff(int e) const;

    UPoly operator-() const;
    friend UPoly operator+(const UPoly& a, const UPoly& b);
    friend UPoly operator-(const UPoly& a, const UPoly& b);
    friend UPoly operator*(const UPoly& a, const UPoly& b);
    UPoly scaled(const GaussRat& c) const;
    UPoly shifted(int k) const;
    UPoly bar() const;
    UPoly conj() const;
    friend bool operator==(const UPoly& a, const UPoly& b);

    GaussRat eval(const GaussRat& x) const;

    // Polynomial (not Laurent) division; both must have min_exp >= 0.
    static std::pair<UPoly, UPoly> divmod(const UPoly& a, const UPoly& b);
    // Monic gcd of Laurent polynomials up to units c*u^k; result has min_exp 0.
    static UPoly gcd(const UPoly& a, const UPoly& b);
    // Exact division a/b; throws if not exact.
    static UPoly exact_div(const UPoly& a, const UPoly& b);

    std::string str() const;
    std::size_t hash() const;

private:
    std::vector<Term> t_;
};

// Element of Q(i)(u) with u^4 = q.
class Scalar {
public:
    Scalar() : den_(GaussRat(1)) {}
    Scalar(long long v) : num_(GaussRat(v)), den_(GaussRat(1)) {}
    Scalar(const GaussRat& c) : num_(c), den_(GaussRat(1)) {}
    Scalar(UPoly p) : num_(std::move(p)), den_(GaussRat(1)) {}
    Scalar(UPoly num, UPoly den);

    static Scalar u_pow(int k) { return Scalar(UPoly::monomial(k)); }
    // q^{k/4}
    static Scalar q_quarter(int k) { return u_pow(k); }
    // q^{k/2}
    static Scalar q_half(int k) { return u_pow(2 * k); }
    static Scalar q_pow(int k) { return u_pow(4 * k); }
    static Scalar i() { return Scalar(GaussRat::i()); }

    const UPoly& num() const { return num_; }
    const UPoly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_laurent() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar inv() const;
    Scalar pow(int k) const;
    friend Scalar operator+(const Scalar& a, const Scalar& b);
    friend Scalar operator-(const Scalar& a, const Scalar& b);
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inv(); }
    Scalar& operator+=(const Scalar& b) { return *this = *this + b; }
    Scalar& operator-=(const Scalar& b) { return *this = *this - b; }
    Scalar& operator*=(const Scalar& b) { return *this = *this * b; }
    Scalar& operator/=(const Scalar& b) { return *this = *this / b; }
    friend bool operator==(const Scalar& a, const Scalar& b) { return a.num_ == b.num_ && a.den_ == b.den_; }

    Scalar bar() const;
    GaussRat eval(const GaussRat& u) const;

    // Canonical "(<num>)/(<den>)".
    std::string str() const;
    // Numerator only when den = 1, else canonical.
    std::string pretty() const;
    static Scalar parse(std::string_view s);
    std::size_t hash() const { return num_.hash() * 31u ^ den_.hash(); }

    // Reduce by gcd and fix the unit; public for idempotence tests.
    static Scalar normalize(UPoly num, UPoly den);

private:
    struct Raw {};
    Scalar(Raw, UPoly num, UPoly den) : num_(std::move(num)), den_(std::move(den)) {}
    // den shifted to min exponent 0 and made monic; gcd(num, den) assumed 1
    static Scalar fix_unit(UPoly num, UPoly den);
    UPoly num_, den_;
};

Scalar qint(int m, bool half = false);
Scalar qfact(int m, bool half = false);
Scalar qbinom(int m, int k);
// Zero outside 0 <= k <= m instead of throwing.
Scalar qbinom0(int m, int k);

struct Params {
    Scalar sigmaN, t, kappa, dS, dV;
    int N = 0, n = 0;
};

Params qparams(int N);
bool gf_check(int m);
bool moment2_check(int m);
// The identity exactly as stated (without the factor 4 of its proof).
bool moment2_literal_statement(int m);
inline Scalar bar_map(const Scalar& x) { return x.bar(); }

// Default numeric probe point 7/5; QSB_PROBE_POINT overrides.
GaussRat probe_point();

}  // namespace qsb
