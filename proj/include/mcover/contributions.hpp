// SPDX-License-Identifier: MIT
#pragma once

#include "exact.hpp"
#include "fixedpoints.hpp"

#include <stdexcept>
#include <string>

namespace mcover {

namespace detail {

inline BigInt factorial(long n)
{
    BigInt r;
    mpz_fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigInt double_factorial(long n)
{
    if (n <= 0) return 1;
    BigInt r;
    mpz_2fac_ui(r.get_mpz_t(), static_cast<unsigned long>(n));
    return r;
}

inline BigRational rpow(const BigRational& base, long e)
{
    BigInt n, d;
    const unsigned long u = static_cast<unsigned long>(e < 0 ? -e : e);
    mpz_pow_ui(n.get_mpz_t(), base.get_num_mpz_t(), u);
    mpz_pow_ui(d.get_mpz_t(), base.get_den_mpz_t(), u);
    return e < 0 ? make_rational(d, n) : make_rational(n, d);
}

inline int sign_pow(long e) { return (e % 2 == 0) ? 1 : -1; }

inline long ceil_half(long n) { return n >= 0 ? (n + 1) / 2 : -((-n) / 2); }

inline BigRational q(long a, long b = 1) { return make_rational(a, b); }

} // namespace detail

/// Which class the psi-linear part of a main factor pairs with.
enum class PsiPairing { none, psi, psi_dual };

struct FactorBundle {
    PsiLinear main;
    AlphaMonomial auxiliary = AlphaMonomial::one();
    BigRational automorphism_scale{1};
    // Sign normalising the P1 family rows to the orientation of the P0 rows.
    BigRational orientation{1};
    PsiPairing pairing = PsiPairing::none;
};

/// 1/d * alpha^(6d-4) * (d!(2d)!/d^(3d))^2 * (-1)^(3d-1), the whole contribution
/// of the component mapping onto the base curve.
inline AlphaMonomial base_contribution(int d)
{
    if (d < 1) throw UnsupportedDegree("degree must be positive");
    using namespace detail;
    BigInt dd;
    mpz_ui_pow_ui(dd.get_mpz_t(), static_cast<unsigned long>(d), 3ul * static_cast<unsigned long>(d));
    BigRational r = make_rational(factorial(d) * factorial(2 * d), dd);
    return {BigRational(sign_pow(3l * d - 1) * r * r / d), 6l * d - 4};
}

/// Integral of psi over a one-dimensional family locus.
inline BigRational psi_integral(int d, int h)
{
    if (h < 1 || h >= d) throw std::invalid_argument("psi_integral needs 1 <= h <= d-1");
    return make_rational(-1, d - h);
}

/// Pairing of the dual class on an end-bubble family with its fundamental
/// class.  It equals 1/(d-k), the size of the source tangent weight there.
inline BigRational psi_dual_integral(int d, int k)
{
    if (k < 1 || k >= d) throw std::invalid_argument("psi_dual_integral needs 1 <= k <= d-1");
    return make_rational(1, d - k);
}

struct DegenerateNode : std::domain_error {
    using std::domain_error::domain_error;
};

/// Reciprocal of the smoothing weight of a node, as a power -1 monomial.
inline AlphaMonomial node_smoothing(const BigRational& left_weight, const BigRational& right_weight)
{
    BigRational w = left_weight + right_weight;
    if (w == 0) throw DegenerateNode("node with zero smoothing weight");
    return {BigRational(1 / w), -1};
}

/// Ruled-bubble factors.  Any row with is_end_bubble unset is accepted, so the
/// closed form can also be evaluated on rows that only occur as end bubbles.
inline FactorBundle ruled_contribution(const FixedMapKind& m)
{
    validate_row(m);
    if (m.is_end_bubble) throw InvalidKind(describe(m) + ": end bubble passed as ruled");
    using namespace detail;
    const long d = m.degree, h = m.h, k = m.k;
    FactorBundle b;

    switch (m.shape) {
    case Shape::Family: {
        BigRational harmonic{0};
        for (long i = 0; i < h; ++i) harmonic += q(i, h - i) + q(i, k - i) + q(i, d - i);
        BigRational inv = make_rational(BigInt(1), factorial(d - h) * factorial(d - k));
        const int sg = m.contact == Contact::P0 ? sign_pow(h + k) : sign_pow(h + k + 1);
        const long p = 3 * h - 3 * d - 1;
        b.main = PsiLinear(AlphaMonomial{}, AlphaMonomial{BigRational(sg * inv * inv * rpow(q(1, d - k), p) * harmonic), p});
        b.auxiliary = {q(2, d - k), 2};
        b.orientation = m.contact == Contact::P1 ? -1 : 1;
        b.pairing = PsiPairing::psi;
        break;
    }
    case Shape::MonoH: {
        const long p = 3 * h - 3 * d - 1;
        if (m.contact == Contact::P2) {
            BigRational c = q(-1, d - h) / BigRational(factorial(d - h) * factorial(2 * d - 2 * h));
            b.main = AlphaMonomial{BigRational(c * rpow(q(1, d - h), p)), p};
        } else {
            BigRational inv = make_rational(BigInt(1), factorial(d - h) * double_factorial(d - h));
            BigInt two;
            mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(d - h));
            const int sg = sign_pow(d + ceil_half(d + h));
            b.main = AlphaMonomial{BigRational(sg * two * inv * inv * rpow(q(2, d - h), p)), p};
        }
        b.auxiliary = {q(2, d - h), 2};
        break;
    }
    case Shape::MonoK: {
        const long p = 3 * k - 3 * d - 1;
        int sg = -1;
        if (m.contact == Contact::P1) sg = sign_pow(d + k);
        if (m.contact == Contact::P2) sg = sign_pow(d - k);
        BigRational c = q(sg, d - k) / BigRational(factorial(d - k) * factorial(2 * d - 2 * k));
        b.main = AlphaMonomial{BigRational(c * rpow(q(1, d - k), p)), p};
        b.auxiliary = {m.contact == Contact::P2 ? q(2, d - k) : q(-1, d - k), 2};
        break;
    }
    }
    return b;
}

inline FactorBundle end_contribution(const FixedMapKind& m)
{
    validate(m);
    if (!m.is_end_bubble) throw InvalidKind(describe(m) + ": not an end-bubble row");
    using namespace detail;
    const long d = m.degree, k = m.k;
    const long p = 3 - 3 * d;
    FactorBundle b;
    // automorphisms of the end-bubble map, one factor of 1/(d-1) for every row
    b.automorphism_scale = q(1, d - 1);

    if (m.contact == Contact::P2) {
        const int sg = m.shape == Shape::MonoH ? -1 : sign_pow(d - 1);
        BigRational c = q(sg, d - 1) / BigRational(factorial(d - 1) * factorial(2 * d - 2));
        b.main = AlphaMonomial{BigRational(c * rpow(q(1, d - 1), p)), p};
        return b;
    }
    switch (m.shape) {
    case Shape::Family: {
        BigRational inv = make_rational(BigInt(1), factorial(d - 1) * factorial(d - k));
        const int sg = m.contact == Contact::P0 ? sign_pow(k + 1) : sign_pow(k);
        b.main = PsiLinear(AlphaMonomial{}, AlphaMonomial{BigRational(sg * inv * inv * rpow(q(1, d - k), p)), p});
        b.orientation = m.contact == Contact::P1 ? -1 : 1;
        b.pairing = PsiPairing::psi_dual;
        break;
    }
    case Shape::MonoH: {
        BigRational inv = make_rational(BigInt(1), factorial(d - 1) * double_factorial(d - 1));
        BigInt two;
        mpz_ui_pow_ui(two.get_mpz_t(), 2, static_cast<unsigned long>(d));
        const int sg = sign_pow(d + ceil_half(d + 1));
        b.main = AlphaMonomial{BigRational(sg * two * inv * inv * rpow(q(2, d - 1), p)), p};
        break;
    }
    case Shape::MonoK:
        b.main = AlphaMonomial{q(-1, 2), -3};
        break;
    }
    return b;
}

} // namespace mcover
