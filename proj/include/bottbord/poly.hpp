#pragma once

#include <map>
#include <numeric>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "bottbord/errors.hpp"

namespace bottbord {

using Rational = boost::multiprecision::cpp_rational;
using BigInt = boost::multiprecision::cpp_int;

// The field with two elements.
struct Gf2 {
    unsigned char v = 0;
    Gf2() = default;
    Gf2(long long x) : v(static_cast<unsigned char>(((x % 2) + 2) % 2)) {}
    friend Gf2 operator+(Gf2 a, Gf2 b) { return Gf2(a.v ^ b.v); }
    friend Gf2 operator-(Gf2 a, Gf2 b) { return Gf2(a.v ^ b.v); }
    friend Gf2 operator*(Gf2 a, Gf2 b) { return Gf2(a.v & b.v); }
    friend Gf2 operator/(Gf2 a, Gf2 b)
    {
        if (!b.v)
            throw Error(Errc::NonUnitNormalization, "division by zero in GF(2)");
        return a;
    }
    Gf2 operator-() const { return *this; }
    Gf2& operator+=(Gf2 b) { v ^= b.v; return *this; }
    Gf2& operator-=(Gf2 b) { v ^= b.v; return *this; }
    Gf2& operator*=(Gf2 b) { v &= b.v; return *this; }
    friend bool operator==(Gf2 a, Gf2 b) { return a.v == b.v; }
    friend std::ostream& operator<<(std::ostream& os, Gf2 a) { return os << int(a.v); }
};

inline bool is_zero(const Gf2& c) { return c.v == 0; }
inline bool is_zero(const Rational& c) { return c == 0; }

struct Monomial {
    std::vector<int> exp;
    int degree() const { return std::accumulate(exp.begin(), exp.end(), 0); }
    friend bool operator==(const Monomial&, const Monomial&) = default;
};

// Graded-lex with u_1 < ... < u_m: compare total degree, then exponents of
// the highest variables first.
struct GrlexLess {
    bool operator()(const Monomial& a, const Monomial& b) const
    {
        int da = a.degree(), db = b.degree();
        if (da != db)
            return da < db;
        for (int i = static_cast<int>(a.exp.size()) - 1; i >= 0; --i)
            if (a.exp[i] != b.exp[i])
                return a.exp[i] < b.exp[i];
        return false;
    }
};

template <class C>
class Polynomial {
public:
    using Terms = std::map<Monomial, C, GrlexLess>;

    Polynomial() = default;
    explicit Polynomial(int nvars) : nvars_(nvars) {}

    static Polynomial zero(int nvars) { return Polynomial(nvars); }

    static Polynomial constant(int nvars, C c)
    {
        Polynomial p(nvars);
        if (!is_zero(c))
            p.terms_.emplace(Monomial{std::vector<int>(nvars, 0)}, std::move(c));
        return p;
    }

    // u_i, 1-based.
    static Polynomial var(int nvars, int i)
    {
        Monomial mo{std::vector<int>(nvars, 0)};
        mo.exp[i - 1] = 1;
        Polynomial p(nvars);
        p.terms_.emplace(std::move(mo), C(1));
        return p;
    }

    static Polynomial monomial(int nvars, Monomial mo, C c)
    {
        Polynomial p(nvars);
        if (!is_zero(c))
            p.terms_.emplace(std::move(mo), std::move(c));
        return p;
    }

    int nvars() const { return nvars_; }
    const Terms& terms() const { return terms_; }
    bool is_zero_poly() const { return terms_.empty(); }

    int degree() const // of the leading term; -1 for the zero polynomial
    {
        return terms_.empty() ? -1 : terms_.rbegin()->first.degree();
    }

    bool is_homogeneous(int t) const
    {
        for (const auto& [mo, c] : terms_)
            if (mo.degree() != t)
                return false;
        return true;
    }

    C coeff(const Monomial& mo) const
    {
        auto it = terms_.find(mo);
        return it == terms_.end() ? C(0) : it->second;
    }

    void add_term(const Monomial& mo, const C& c)
    {
        auto it = terms_.find(mo);
        if (it == terms_.end()) {
            if (!is_zero(c))
                terms_.emplace(mo, c);
        } else {
            it->second += c;
            if (is_zero(it->second))
                terms_.erase(it);
        }
    }

    Polynomial& operator+=(const Polynomial& q)
    {
        check_vars(q);
        for (const auto& [mo, c] : q.terms_)
            add_term(mo, c);
        return *this;
    }

    Polynomial& operator-=(const Polynomial& q)
    {
        check_vars(q);
        for (const auto& [mo, c] : q.terms_)
            add_term(mo, -c);
        return *this;
    }

    friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
    friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }

    Polynomial operator-() const
    {
        Polynomial r(nvars_);
        for (const auto& [mo, c] : terms_)
            r.terms_.emplace(mo, -c);
        return r;
    }

    friend Polynomial operator*(const Polynomial& a, const Polynomial& b)
    {
        a.check_vars(b);
        Polynomial r(a.nvars_);
        for (const auto& [ma, ca] : a.terms_)
            for (const auto& [mb, cb] : b.terms_) {
                Monomial mo = ma;
                for (int i = 0; i < a.nvars_; ++i)
                    mo.exp[i] += mb.exp[i];
                r.add_term(mo, ca * cb);
            }
        return r;
    }

    Polynomial& operator*=(const Polynomial& q) { return *this = *this * q; }

    friend Polynomial operator*(const C& c, const Polynomial& p)
    {
        Polynomial r(p.nvars_);
        if (is_zero(c))
            return r;
        for (const auto& [mo, pc] : p.terms_)
            r.add_term(mo, c * pc);
        return r;
    }

    Polynomial pow(int e) const
    {
        Polynomial r = constant(nvars_, C(1));
        Polynomial base = *this;
        while (e > 0) {
            if (e & 1)
                r = r * base;
            e >>= 1;
            if (e)
                base = base * base;
        }
        return r;
    }

    Polynomial homogeneous_part(int t) const
    {
        Polynomial r(nvars_);
        for (const auto& [mo, c] : terms_)
            if (mo.degree() == t)
                r.terms_.emplace(mo, c);
        return r;
    }

    // Relabel variables: out exponent at to[i] = exponent at i.
    Polynomial relabel(const std::vector<int>& to) const
    {
        Polynomial r(nvars_);
        for (const auto& [mo, c] : terms_) {
            Monomial m2{std::vector<int>(nvars_, 0)};
            for (int i = 0; i < nvars_; ++i)
                m2.exp[to[i]] = mo.exp[i];
            r.terms_.emplace(std::move(m2), c);
        }
        return r;
    }

    friend bool operator==(const Polynomial& a, const Polynomial& b)
    {
        return a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
    }

    std::string str() const
    {
        if (terms_.empty())
            return "0";
        std::ostringstream os;
        bool first = true;
        for (auto it = terms_.rbegin(); it != terms_.rend(); ++it) {
            if (!first)
                os << " + ";
            first = false;
            os << it->second;
            for (int i = 0; i < nvars_; ++i)
                if (it->first.exp[i] > 0) {
                    os << "*u" << i + 1;
                    if (it->first.exp[i] > 1)
                        os << "^" << it->first.exp[i];
                }
        }
        return os.str();
    }

private:
    void check_vars(const Polynomial& q) const
    {
        if (nvars_ != q.nvars_)
            throw Error(Errc::ModeMismatch, "polynomials over different variable counts");
    }

    int nvars_ = 0;
    Terms terms_;
};

// Elementary symmetric polynomials e_0..e_k of the given elements, via the
// coefficient recurrence of prod (t + x_i).
template <class C>
std::vector<Polynomial<C>> elementary_symmetric(const std::vector<Polynomial<C>>& xs, int nvars)
{
    std::vector<Polynomial<C>> e;
    e.push_back(Polynomial<C>::constant(nvars, C(1)));
    for (const auto& x : xs) {
        e.push_back(Polynomial<C>::zero(nvars));
        for (int t = static_cast<int>(e.size()) - 1; t >= 1; --t)
            e[t] += x * e[t - 1];
    }
    return e;
}

} // namespace bottbord
