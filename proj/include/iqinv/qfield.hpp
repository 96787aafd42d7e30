#pragma once

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace iqinv {

// Dense univariate polynomial over Z in the variable q, ascending coefficients,
// no trailing zeros. The zero polynomial has no coefficients.
class Poly {
public:
    Poly() = default;
    Poly(long c);
    Poly(const mpz_class& c);
    explicit Poly(std::vector<mpz_class> coeffs);

    static Poly monomial(const mpz_class& c, int deg);

    bool is_zero() const { return c_.empty(); }
    bool is_one() const { return c_.size() == 1 && c_[0] == 1; }
    int degree() const { return static_cast<int>(c_.size()) - 1; }  // -1 for zero
    int order() const;                                              // lowest nonzero degree
    bool is_monomial() const;
    const mpz_class& lead() const { return c_.back(); }
    const std::vector<mpz_class>& coeffs() const { return c_; }
    mpz_class coeff(int k) const;

    mpz_class content() const;  // nonnegative gcd of coefficients
    Poly primitive() const;     // divide by content; zero stays zero
    Poly shift(int k) const;    // multiply by q^k (k may be negative if exact)
    mpz_class eval_one() const;

    Poly operator-() const;
    Poly& operator+=(const Poly& o);
    Poly& operator-=(const Poly& o);
    Poly& operator*=(const mpz_class& c);

    friend Poly operator+(Poly a, const Poly& b) { return a += b; }
    friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
    friend Poly operator*(const Poly& a, const Poly& b);
    friend bool operator==(const Poly& a, const Poly& b) { return a.c_ == b.c_; }

    // exact quotient; throws DomainError when b does not divide a
    static Poly divexact(const Poly& a, const Poly& b);
    // exact division of every coefficient by an integer
    Poly divexact(const mpz_class& c) const;

    std::string str() const;

private:
    void trim();
    std::vector<mpz_class> c_;
};

// gcd in Z[q]; result has positive leading coefficient (zero if both are zero)
Poly gcd(const Poly& a, const Poly& b);

// Element of Q(q) stored as num/den with gcd 1 in Z[q] and lead(den) > 0.
// Canonical: equal values have identical representations.
class Scalar {
public:
    Scalar() : num_(), den_(1) {}
    Scalar(long c) : num_(c), den_(1) {}
    Scalar(const mpz_class& c) : num_(c), den_(1) {}
    Scalar(const mpq_class& c);

    static Scalar canonical(Poly num, Poly den);
    static Scalar from_poly(Poly p) { return Scalar(std::move(p), Poly(1), 0); }
    static Scalar q() { return q_pow(1); }
    static Scalar q_pow(int k);
    static Scalar parse(std::string_view text);

    const Poly& num() const { return num_; }
    const Poly& den() const { return den_; }
    bool is_zero() const { return num_.is_zero(); }
    bool is_one() const { return num_.is_one() && den_.is_one(); }
    bool is_poly() const { return den_.is_one(); }

    Scalar operator-() const;
    Scalar inverse() const;
    Scalar& operator+=(const Scalar& o);
    Scalar& operator-=(const Scalar& o);
    Scalar& operator*=(const Scalar& o);
    Scalar& operator/=(const Scalar& o);

    friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
    friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
    friend Scalar operator*(const Scalar& a, const Scalar& b);
    friend Scalar operator/(const Scalar& a, const Scalar& b);
    friend bool operator==(const Scalar& a, const Scalar& b) {
        return a.num_ == b.num_ && a.den_ == b.den_;
    }

    // value at q = 1; throws PoleError if the denominator vanishes there
    mpq_class specialize_q1() const;

    std::string str() const;

private:
    Scalar(Poly num, Poly den, int) : num_(std::move(num)), den_(std::move(den)) {}
    Poly num_;
    Poly den_;
};

}  // namespace iqinv
