#include "iqinv/qfield.hpp"

#include "iqinv/errors.hpp"

#include <algorithm>
#include <cctype>
#include <utility>

namespace iqinv {

Poly::Poly(long c) {
    if (c != 0) c_.emplace_back(c);
}

Poly::Poly(const mpz_class& c) {
    if (c != 0) c_.push_back(c);
}

Poly::Poly(std::vector<mpz_class> coeffs) : c_(std::move(coeffs)) { trim(); }

Poly Poly::monomial(const mpz_class& c, int deg) {
    Poly p;
    if (c == 0) return p;
    p.c_.assign(static_cast<std::size_t>(deg) + 1, mpz_class(0));
    p.c_.back() = c;
    return p;
}

void Poly::trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
}

int Poly::order() const {
    for (std::size_t k = 0; k < c_.size(); ++k)
        if (c_[k] != 0) return static_cast<int>(k);
    return -1;
}

bool Poly::is_monomial() const { return !c_.empty() && order() == degree(); }

mpz_class Poly::coeff(int k) const {
    if (k < 0 || k >= static_cast<int>(c_.size())) return 0;
    return c_[k];
}

mpz_class Poly::content() const {
    mpz_class g = 0;
    for (const auto& x : c_) {
        if (x == 0) continue;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) break;
    }
    return g;
}

Poly Poly::primitive() const {
    if (is_zero()) return *this;
    mpz_class g = content();
    if (g == 1) return *this;
    return divexact(g);
}

Poly Poly::divexact(const mpz_class& c) const {
    Poly r(*this);
    for (auto& x : r.c_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return r;
}

Poly Poly::shift(int k) const {
    if (is_zero() || k == 0) return *this;
    Poly r;
    if (k > 0) {
        r.c_.assign(static_cast<std::size_t>(k), mpz_class(0));
        r.c_.insert(r.c_.end(), c_.begin(), c_.end());
    } else {
        if (order() < -k) throw DomainError("Poly::shift: negative shift is not exact");
        r.c_.assign(c_.begin() + (-k), c_.end());
    }
    return r;
}

mpz_class Poly::eval_one() const {
    mpz_class s = 0;
    for (const auto& x : c_) s += x;
    return s;
}

Poly Poly::operator-() const {
    Poly r(*this);
    for (auto& x : r.c_) x = -x;
    return r;
}

Poly& Poly::operator+=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] += o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator-=(const Poly& o) {
    if (o.c_.size() > c_.size()) c_.resize(o.c_.size(), mpz_class(0));
    for (std::size_t k = 0; k < o.c_.size(); ++k) c_[k] -= o.c_[k];
    trim();
    return *this;
}

Poly& Poly::operator*=(const mpz_class& c) {
    if (c == 0) {
        c_.clear();
        return *this;
    }
    for (auto& x : c_) x *= c;
    return *this;
}

Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    if (a.c_.size() == 1) {
        Poly r(b);
        r *= a.c_[0];
        return r;
    }
    if (b.c_.size() == 1) {
        Poly r(a);
        r *= b.c_[0];
        return r;
    }
    Poly r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, mpz_class(0));
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i] == 0) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j)
            if (b.c_[j] != 0) mpz_addmul(r.c_[i + j].get_mpz_t(), a.c_[i].get_mpz_t(), b.c_[j].get_mpz_t());
    }
    r.trim();
    return r;
}

Poly Poly::divexact(const Poly& a, const Poly& b) {
    if (b.is_zero()) throw DomainError("Poly::divexact: division by zero polynomial");
    if (b.is_one()) return a;
    if (b.c_.size() == 1) {
        Poly r(a);
        for (auto& x : r.c_) {
            if (!mpz_divisible_p(x.get_mpz_t(), b.c_[0].get_mpz_t()))
                throw DomainError("Poly::divexact: inexact division");
            mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), b.c_[0].get_mpz_t());
        }
        return r;
    }
    if (a.is_zero()) return a;
    int da = a.degree(), db = b.degree();
    if (da < db) throw DomainError("Poly::divexact: inexact division");
    std::vector<mpz_class> rem(a.c_);
    std::vector<mpz_class> quo(static_cast<std::size_t>(da - db) + 1);
    const mpz_class& lb = b.c_.back();
    for (int k = da - db; k >= 0; --k) {
        mpz_class& top = rem[k + db];
        if (top == 0) continue;
        if (!mpz_divisible_p(top.get_mpz_t(), lb.get_mpz_t()))
            throw DomainError("Poly::divexact: inexact division");
        mpz_class qk;
        mpz_divexact(qk.get_mpz_t(), top.get_mpz_t(), lb.get_mpz_t());
        for (int j = 0; j <= db; ++j)
            if (b.c_[j] != 0) mpz_submul(rem[k + j].get_mpz_t(), qk.get_mpz_t(), b.c_[j].get_mpz_t());
        quo[k] = std::move(qk);
    }
    for (const auto& x : rem)
        if (x != 0) throw DomainError("Poly::divexact: inexact division");
    return Poly(std::move(quo));
}

namespace {

// primitive pseudo-remainder of a by b (deg a >= deg b)
Poly prem_primitive(Poly a, const Poly& b) {
    const int db = b.degree();
    const mpz_class& lb = b.lead();
    std::vector<mpz_class> r(a.coeffs());
    int dr = a.degree();
    while (dr >= db) {
        mpz_class lr = r[dr];
        for (auto& x : r) x *= lb;
        for (int j = 0; j <= db; ++j)
            if (b.coeffs()[j] != 0) mpz_submul(r[dr - db + j].get_mpz_t(), lr.get_mpz_t(), b.coeffs()[j].get_mpz_t());
        while (dr >= 0 && r[dr] == 0) --dr;
        r.resize(static_cast<std::size_t>(dr + 1));
    }
    return Poly(std::move(r)).primitive();
}

Poly normalize_sign(Poly p) {
    if (!p.is_zero() && p.lead() < 0) return -p;
    return p;
}

}  // namespace

Poly gcd(const Poly& a, const Poly& b) {
    if (a.is_zero()) return normalize_sign(b);
    if (b.is_zero()) return normalize_sign(a);
    mpz_class g;
    mpz_gcd(g.get_mpz_t(), a.content().get_mpz_t(), b.content().get_mpz_t());
    if (a.degree() == 0 || b.degree() == 0) return Poly(g);
    int k = std::min(a.order(), b.order());
    Poly x = a.shift(-a.order()).primitive();
    Poly y = b.shift(-b.order()).primitive();
    if (x.degree() < y.degree()) std::swap(x, y);
    while (y.degree() > 0) {
        Poly r = prem_primitive(x, y);
        x = std::move(y);
        y = std::move(r);
    }
    Poly res = y.is_zero() ? x : Poly(1);
    res = normalize_sign(std::move(res));
    res *= g;
    return res.shift(k);
}

std::string Poly::str() const {
    if (is_zero()) return "0";
    std::string out;
    for (int k = degree(); k >= 0; --k) {
        const mpz_class& c = c_[k];
        if (c == 0) continue;
        mpz_class a = abs(c);
        if (c < 0)
            out += "-";
        else if (!out.empty())
            out += "+";
        if (k == 0) {
            out += a.get_str();
            continue;
        }
        if (a != 1) out += a.get_str() + "*";
        out += "q";
        if (k > 1) out += "^" + std::to_string(k);
    }
    return out;
}

Scalar::Scalar(const mpq_class& c) : num_(c.get_num()), den_(c.get_den()) {}

Scalar Scalar::canonical(Poly num, Poly den) {
    if (den.is_zero()) throw DomainError("Scalar: zero denominator");
    if (num.is_zero()) return Scalar();
    if (!den.is_one()) {
        Poly g = gcd(num, den);
        if (!g.is_one()) {
            num = Poly::divexact(num, g);
            den = Poly::divexact(den, g);
        }
        if (den.lead() < 0) {
            num = -num;
            den = -den;
        }
    }
    return Scalar(std::move(num), std::move(den), 0);
}

Scalar Scalar::q_pow(int k) {
    if (k >= 0) return Scalar(Poly::monomial(1, k), Poly(1), 0);
    return Scalar(Poly(1), Poly::monomial(1, -k), 0);
}

Scalar Scalar::operator-() const { return Scalar(-num_, den_, 0); }

Scalar Scalar::inverse() const {
    if (is_zero()) throw DomainError("Scalar: division by zero");
    if (num_.lead() < 0) return Scalar(-den_, -num_, 0);
    return Scalar(den_, num_, 0);
}

Scalar& Scalar::operator+=(const Scalar& o) {
    if (o.is_zero()) return *this;
    if (is_zero()) return *this = o;
    if (den_ == o.den_) {
        num_ += o.num_;
        if (num_.is_zero())
            den_ = Poly(1);
        else if (!den_.is_one())
            *this = canonical(std::move(num_), std::move(den_));
        return *this;
    }
    // Henrici: only the common factor of the denominators can cancel
    Poly g = gcd(den_, o.den_);
    if (g.is_one()) {
        num_ = num_ * o.den_ + o.num_ * den_;
        den_ = den_ * o.den_;
        if (num_.is_zero()) den_ = Poly(1);
        return *this;
    }
    Poly b1 = Poly::divexact(den_, g);
    Poly d1 = Poly::divexact(o.den_, g);
    Poly n = num_ * d1 + o.num_ * b1;
    if (n.is_zero()) return *this = Scalar();
    Poly den = b1 * o.den_;
    Poly h = gcd(n, g);
    if (!h.is_one()) {
        n = Poly::divexact(n, h);
        den = Poly::divexact(den, h);
    }
    num_ = std::move(n);
    den_ = std::move(den);
    return *this;
}

Scalar& Scalar::operator-=(const Scalar& o) { return *this += -o; }

Scalar operator*(const Scalar& a, const Scalar& b) {
    if (a.is_zero() || b.is_zero()) return Scalar();
    if (a.den_.is_one() && b.den_.is_one()) return Scalar(a.num_ * b.num_, Poly(1), 0);
    Poly g1 = gcd(a.num_, b.den_);
    Poly g2 = gcd(b.num_, a.den_);
    Poly an = g1.is_one() ? a.num_ : Poly::divexact(a.num_, g1);
    Poly bd = g1.is_one() ? b.den_ : Poly::divexact(b.den_, g1);
    Poly bn = g2.is_one() ? b.num_ : Poly::divexact(b.num_, g2);
    Poly ad = g2.is_one() ? a.den_ : Poly::divexact(a.den_, g2);
    Poly num = an * bn;
    Poly den = ad * bd;
    if (den.lead() < 0) {
        num = -num;
        den = -den;
    }
    return Scalar(std::move(num), std::move(den), 0);
}

Scalar operator/(const Scalar& a, const Scalar& b) { return a * b.inverse(); }

Scalar& Scalar::operator*=(const Scalar& o) { return *this = *this * o; }
Scalar& Scalar::operator/=(const Scalar& o) { return *this = *this / o; }

mpq_class Scalar::specialize_q1() const {
    mpz_class d = den_.eval_one();
    if (d == 0) throw PoleError("Scalar: pole at q = 1 in " + str());
    mpq_class r(num_.eval_one(), d);
    r.canonicalize();
    return r;
}

std::string Scalar::str() const {
    if (den_.is_one()) return num_.str();
    return "(" + num_.str() + ")/(" + den_.str() + ")";
}

namespace {

struct PolyParser {
    std::string_view s;
    std::size_t pos = 0;

    void skip() {
        while (pos < s.size() && std::isspace(static_cast<unsigned char>(s[pos]))) ++pos;
    }
    bool peek(char c) {
        skip();
        return pos < s.size() && s[pos] == c;
    }
    [[noreturn]] void fail() const {
        throw DomainError("Scalar::parse: malformed input '" + std::string(s) + "'");
    }
    mpz_class number() {
        skip();
        std::size_t start = pos;
        while (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) ++pos;
        if (start == pos) fail();
        return mpz_class(std::string(s.substr(start, pos - start)));
    }
    // term := [int ['*']] ['q' ['^' int]]
    Poly term() {
        mpz_class c = 1;
        bool have = false;
        skip();
        if (pos < s.size() && std::isdigit(static_cast<unsigned char>(s[pos]))) {
            c = number();
            have = true;
            if (peek('*')) {
                ++pos;
                if (!peek('q')) fail();
            }
        }
        int k = 0;
        if (peek('q')) {
            ++pos;
            k = 1;
            have = true;
            if (peek('^')) {
                ++pos;
                k = static_cast<int>(number().get_si());
            }
        }
        if (!have) fail();
        return Poly::monomial(c, k);
    }
    Poly poly() {
        Poly acc;
        bool first = true;
        while (true) {
            skip();
            int sign = 1;
            if (peek('+') || peek('-')) {
                sign = s[pos] == '-' ? -1 : 1;
                ++pos;
            } else if (!first) {
                break;
            }
            Poly t = term();
            if (sign < 0) t = -t;
            acc += t;
            first = false;
        }
        return acc;
    }
    Poly group() {
        if (peek('(')) {
            ++pos;
            Poly p = poly();
            if (!peek(')')) fail();
            ++pos;
            return p;
        }
        return poly();
    }
};

}  // namespace

Scalar Scalar::parse(std::string_view text) {
    PolyParser p{text};
    Poly num = p.group();
    Poly den(1);
    if (p.peek('/')) {
        ++p.pos;
        den = p.group();
    }
    p.skip();
    if (p.pos != text.size()) p.fail();
    return canonical(std::move(num), std::move(den));
}

}  // namespace iqinv
