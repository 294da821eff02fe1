// SPDX-License-Identifier: MIT
#pragma once

#include <gmpxx.h>

#include <algorithm>
#include <cstdint>
#include <map>
#include <utility>
#include <vector>

namespace mcover {

using BigInt = mpz_class;
using PrimePower = std::pair<BigInt, unsigned long>;

namespace detail {

inline const std::vector<unsigned long>& small_primes()
{
    static const std::vector<unsigned long> table = [] {
        constexpr unsigned long limit = 1ul << 14;
        std::vector<bool> composite(limit, false);
        std::vector<unsigned long> out;
        for (unsigned long i = 2; i < limit; ++i) {
            if (composite[i]) continue;
            out.push_back(i);
            for (unsigned long j = i * i; j < limit; j += i) composite[j] = true;
        }
        return out;
    }();
    return table;
}

// Brent's variant of Pollard rho.  n must be odd, composite and not a
// perfect power; returns a nontrivial divisor.
inline BigInt rho_divisor(const BigInt& n)
{
    BigInt x, y, ys, q, g, t;
    for (unsigned long c = 1;; ++c) {
        auto step = [&](BigInt& v) {
            v = v * v + c;
            mpz_mod(v.get_mpz_t(), v.get_mpz_t(), n.get_mpz_t());
        };
        y = 2;
        q = 1;
        g = 1;
        std::uint64_t r = 1;
        constexpr std::uint64_t m = 64;
        do {
            x = y;
            for (std::uint64_t i = 0; i < r; ++i) step(y);
            for (std::uint64_t k = 0; k < r && g == 1; k += m) {
                ys = y;
                const std::uint64_t lim = std::min(m, r - k);
                for (std::uint64_t i = 0; i < lim; ++i) {
                    step(y);
                    t = x - y;
                    q *= abs(t);
                    mpz_mod(q.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
                }
                mpz_gcd(g.get_mpz_t(), q.get_mpz_t(), n.get_mpz_t());
            }
            r *= 2;
        } while (g == 1);
        if (g == n) {
            // the batched product overshot; replay one step at a time
            do {
                step(ys);
                t = x - ys;
                t = abs(t);
                mpz_gcd(g.get_mpz_t(), t.get_mpz_t(), n.get_mpz_t());
            } while (g == 1);
        }
        if (g != n) return g;
    }
}

inline void split(const BigInt& n, unsigned long mult, std::map<BigInt, unsigned long>& acc);

inline void split_composite(const BigInt& n, unsigned long mult, std::map<BigInt, unsigned long>& acc)
{
    if (mpz_perfect_power_p(n.get_mpz_t())) {
        BigInt root;
        for (unsigned long e = mpz_sizeinbase(n.get_mpz_t(), 2); e >= 2; --e) {
            if (mpz_root(root.get_mpz_t(), n.get_mpz_t(), e) != 0) {
                split(root, mult * e, acc);
                return;
            }
        }
    }
    BigInt a = rho_divisor(n);
    BigInt b = n / a;
    split(a, mult, acc);
    split(b, mult, acc);
}

inline void split(const BigInt& n, unsigned long mult, std::map<BigInt, unsigned long>& acc)
{
    if (n == 1) return;
    if (mpz_probab_prime_p(n.get_mpz_t(), 40) != 0) {
        acc[n] += mult;
        return;
    }
    split_composite(n, mult, acc);
}

} // namespace detail

inline bool is_prime(const BigInt& n)
{
    return n >= 2 && mpz_probab_prime_p(n.get_mpz_t(), 40) != 0;
}

/// Prime factorization of n >= 1 with bases ascending.  Small factors come
/// out by trial division, the cofactor goes through Pollard rho.
inline std::vector<PrimePower> factorize(BigInt n)
{
    std::map<BigInt, unsigned long> acc;
    for (unsigned long p : detail::small_primes()) {
        if (n == 1) break;
        unsigned long e = 0;
        while (mpz_divisible_ui_p(n.get_mpz_t(), p)) {
            mpz_divexact_ui(n.get_mpz_t(), n.get_mpz_t(), p);
            ++e;
        }
        if (e != 0) acc[BigInt(p)] = e;
    }
    detail::split(n, 1, acc);
    return {acc.begin(), acc.end()};
}

} // namespace mcover
