// SPDX-License-Identifier: MIT
#pragma once

#include "primes.hpp"

#include <gmpxx.h>

#include <cctype>
#include <cstddef>
#include <ostream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace mcover {

// GMP keeps mpq values in lowest terms with a positive denominator as long as
// they are built through arithmetic or make_rational, which is all we do.
using BigRational = mpq_class;

inline BigRational make_rational(const BigInt& num, const BigInt& den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    BigRational q(num, den);
    q.canonicalize();
    return q;
}

inline BigRational make_rational(long num, long den = 1)
{
    return make_rational(BigInt(num), BigInt(den));
}

inline std::string to_string(const BigRational& q) { return q.get_str(); }

// ---------------------------------------------------------------------------
// c * alpha^power

struct AlphaMonomial {
    BigRational coeff{0};
    long power = 0;

    AlphaMonomial() = default;
    AlphaMonomial(BigRational c, long p) : coeff(std::move(c)), power(p)
    {
        if (coeff == 0) power = 0;
    }

    static AlphaMonomial one() { return {BigRational(1), 0}; }
    bool is_zero() const { return coeff == 0; }

    friend bool operator==(const AlphaMonomial& a, const AlphaMonomial& b)
    {
        return a.power == b.power && a.coeff == b.coeff;
    }
};

inline AlphaMonomial mono_mul(const AlphaMonomial& a, const AlphaMonomial& b)
{
    return {a.coeff * b.coeff, a.power + b.power};
}

inline AlphaMonomial operator*(const AlphaMonomial& a, const AlphaMonomial& b) { return mono_mul(a, b); }

inline AlphaMonomial operator*(const AlphaMonomial& a, const BigRational& s) { return {a.coeff * s, a.power}; }

/// Sum of two monomials.  Only defined when the powers agree (or one side is
/// zero), which is always the case for the homogeneous quantities here.
inline AlphaMonomial operator+(const AlphaMonomial& a, const AlphaMonomial& b)
{
    if (a.is_zero()) return b;
    if (b.is_zero()) return a;
    if (a.power != b.power)
        throw std::logic_error("adding alpha monomials of different degree " + std::to_string(a.power) + " and "
                               + std::to_string(b.power));
    return {a.coeff + b.coeff, a.power};
}

inline AlphaMonomial reciprocal(const AlphaMonomial& a)
{
    if (a.is_zero()) throw std::domain_error("reciprocal of zero monomial");
    return {1 / a.coeff, -a.power};
}

inline AlphaMonomial alpha_flip(const AlphaMonomial& a)
{
    return (a.power % 2 == 0) ? a : AlphaMonomial{-a.coeff, a.power};
}

inline std::string to_string(const AlphaMonomial& a)
{
    return a.coeff.get_str() + "*a^" + std::to_string(a.power);
}

inline std::ostream& operator<<(std::ostream& os, const AlphaMonomial& a) { return os << to_string(a); }

// ---------------------------------------------------------------------------
// const_part + psi_part * psi, with psi^2 = 0

struct PsiLinear {
    AlphaMonomial const_part;
    AlphaMonomial psi_part;

    PsiLinear() = default;
    PsiLinear(AlphaMonomial c) : const_part(std::move(c)) {}
    PsiLinear(AlphaMonomial c, AlphaMonomial p) : const_part(std::move(c)), psi_part(std::move(p)) {}

    bool has_psi() const { return !psi_part.is_zero(); }

    friend bool operator==(const PsiLinear& a, const PsiLinear& b)
    {
        return a.const_part == b.const_part && a.psi_part == b.psi_part;
    }
};

inline PsiLinear operator*(const PsiLinear& a, const PsiLinear& b)
{
    return {a.const_part * b.const_part, a.const_part * b.psi_part + a.psi_part * b.const_part};
}

inline PsiLinear operator+(const PsiLinear& a, const PsiLinear& b)
{
    return {a.const_part + b.const_part, a.psi_part + b.psi_part};
}

inline PsiLinear alpha_flip(const PsiLinear& x) { return {alpha_flip(x.const_part), alpha_flip(x.psi_part)}; }

inline std::string to_string(const PsiLinear& x)
{
    if (!x.has_psi()) return to_string(x.const_part);
    std::string s = "(" + to_string(x.psi_part) + ")*psi";
    if (x.const_part.is_zero()) return s;
    return to_string(x.const_part) + "+" + s;
}

// ---------------------------------------------------------------------------
// Factored rationals: -(2^3*5)/(3^2*7)

struct FactoredRational {
    int sign = 1;
    std::vector<PrimePower> numerator;
    std::vector<PrimePower> denominator;

    BigRational value() const
    {
        auto expand = [](const std::vector<PrimePower>& fs) {
            BigInt r = 1, t;
            for (const auto& [p, e] : fs) {
                mpz_pow_ui(t.get_mpz_t(), p.get_mpz_t(), e);
                r *= t;
            }
            return r;
        };
        BigInt n = expand(numerator);
        if (sign < 0) n = -n;
        return make_rational(n, expand(denominator));
    }
};

struct ParseError : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

inline FactoredRational factor_rational(const BigRational& q)
{
    if (q == 0) throw std::domain_error("cannot factor zero");
    FactoredRational f;
    f.sign = sgn(q) < 0 ? -1 : 1;
    f.numerator = factorize(abs(q.get_num()));
    f.denominator = factorize(q.get_den());
    return f;
}

namespace detail {

inline std::string product_text(const std::vector<PrimePower>& fs)
{
    if (fs.empty()) return "1";
    std::string s;
    for (const auto& [p, e] : fs) {
        if (!s.empty()) s += '*';
        s += p.get_str();
        if (e != 1) s += '^' + std::to_string(e);
    }
    return s;
}

class FactoredParser {
public:
    explicit FactoredParser(std::string_view text) : s_(text) {}

    FactoredRational run()
    {
        FactoredRational out;
        if (eat('-')) out.sign = -1;
        if (peek() == '(') {
            out.numerator = paren_product();
            expect('/');
            out.denominator = paren_product();
        } else {
            out.numerator = product();
            if (pos_ != s_.size()) {
                expect('/');
                out.denominator = paren_product();
            }
        }
        if (pos_ != s_.size()) fail("trailing text", std::string(s_.substr(pos_)));
        for (const auto& [p, e] : out.numerator)
            for (const auto& [q, f] : out.denominator)
                if (p == q) fail("prime on both sides of the fraction bar", p.get_str());
        return out;
    }

private:
    std::string_view s_;
    std::size_t pos_ = 0;

    [[noreturn]] void fail(const std::string& why, const std::string& token) const
    {
        throw ParseError(why + ": '" + token + "' at offset " + std::to_string(pos_) + " in \"" + std::string(s_) + "\"");
    }

    char peek() const { return pos_ < s_.size() ? s_[pos_] : '\0'; }

    bool eat(char c)
    {
        if (peek() != c) return false;
        ++pos_;
        return true;
    }

    void expect(char c)
    {
        if (!eat(c)) fail(std::string("expected '") + c + "'", pos_ < s_.size() ? std::string(1, s_[pos_]) : "<end>");
    }

    std::string digits()
    {
        std::size_t start = pos_;
        while (std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
        if (start == pos_) fail("expected a number", pos_ < s_.size() ? std::string(1, s_[pos_]) : "<end>");
        return std::string(s_.substr(start, pos_ - start));
    }

    std::vector<PrimePower> paren_product()
    {
        expect('(');
        auto p = product();
        expect(')');
        return p;
    }

    std::vector<PrimePower> product()
    {
        std::vector<PrimePower> out;
        std::size_t start = pos_;
        std::string tok = digits();
        if (tok == "1" && peek() != '^') {
            if (peek() == '*') fail("unit inside a product", tok);
            return out;
        }
        pos_ = start;
        do {
            std::size_t at = pos_;
            tok = digits();
            if (tok.size() > 1 && tok[0] == '0') fail("leading zero", tok);
            BigInt p(tok);
            if (!is_prime(p)) {
                pos_ = at;
                fail("non-prime base", tok);
            }
            unsigned long e = 1;
            if (eat('^')) {
                std::string et = digits();
                if (et[0] == '0') fail(et == "0" ? "zero exponent" : "leading zero", et);
                if (et.size() > 9) fail("exponent too large", et);
                e = std::stoul(et);
            }
            if (!out.empty() && !(out.back().first < p)) {
                pos_ = at;
                fail("primes not strictly ascending", tok);
            }
            out.emplace_back(std::move(p), e);
        } while (eat('*'));
        return out;
    }
};

} // namespace detail

inline std::string format_factored(const FactoredRational& f)
{
    std::string out = f.sign < 0 ? "-" : "";
    std::string num = detail::product_text(f.numerator);
    if (f.denominator.empty()) return out + num;
    if (f.numerator.size() > 1) num = "(" + num + ")";
    return out + num + "/(" + detail::product_text(f.denominator) + ")";
}

inline std::string format_factored(const BigRational& q) { return format_factored(factor_rational(q)); }

inline FactoredRational parse_factored_parts(std::string_view s) { return detail::FactoredParser(s).run(); }

inline BigRational parse_factored(std::string_view s) { return parse_factored_parts(s).value(); }

} // namespace mcover
