// SPDX-License-Identifier: MIT
#pragma once

#include "contributions.hpp"
#include "exact.hpp"
#include "fixedpoints.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <thread>
#include <vector>

namespace mcover {

enum class Side { zero, infinity };

struct TraceEntry {
    std::string label;
    PsiLinear value;
};

struct ConfigurationReport {
    Configuration configuration;
    std::vector<TraceEntry> per_factor_trace;
    AlphaMonomial total;
};

struct DegreeViolation : std::logic_error {
    using std::logic_error::logic_error;
};

namespace detail {

// Appends the factors of one chain to the trace and returns their product
// with every psi paired off.  Labels look like z2.node, i1.main, ...
inline AlphaMonomial trace_chain(const Chain& chain, int d, Side side, std::vector<TraceEntry>* trace)
{
    const char* prefix = side == Side::zero ? "z" : "i";
    auto flip = [&](const AlphaMonomial& m) { return side == Side::zero ? m : alpha_flip(m); };
    auto record = [&](std::size_t step, const char* what, const PsiLinear& v) {
        if (trace)
            trace->push_back({prefix + std::to_string(step) + "." + what,
                              side == Side::zero ? v : alpha_flip(v)});
    };
    auto scalar = [](const BigRational& q) { return AlphaMonomial{q, 0}; };

    AlphaMonomial acc = AlphaMonomial::one();
    BigRational prev = base_tangent_weight(d);
    for (std::size_t i = 0; i < chain.steps.size(); ++i) {
        const FixedMapKind& m = chain.steps[i];
        const std::size_t n = i + 1;

        AlphaMonomial node = node_smoothing(prev, source_tangent_weight(m, NodeEnd::node_in));
        record(n, "node", node);

        const FactorBundle b = m.is_end_bubble ? end_contribution(m) : ruled_contribution(m);
        record(n, "main", b.main);
        AlphaMonomial step = b.main.const_part;
        if (b.pairing != PsiPairing::none) {
            BigRational integral =
                b.pairing == PsiPairing::psi ? psi_integral(m.degree, m.h) : psi_dual_integral(m.degree, m.k);
            record(n, b.pairing == PsiPairing::psi ? "psi" : "psi_dual", scalar(integral));
            step = b.main.psi_part * integral;
        }
        if (!m.is_end_bubble) record(n, "aux", b.auxiliary);
        if (b.automorphism_scale != 1) record(n, "scale", scalar(b.automorphism_scale));
        if (b.orientation != 1) record(n, "orient", scalar(b.orientation));

        acc = acc * node * step * b.auxiliary * b.automorphism_scale * b.orientation;
        prev = source_tangent_weight(m, NodeEnd::node_out);
    }
    return flip(acc);
}

} // namespace detail

/// Product of the factors of one side chain (base excluded), psi paired off.
inline AlphaMonomial chain_contribution(const Chain& chain, int d, Side side)
{
    return detail::trace_chain(chain, d, side, nullptr);
}

inline ConfigurationReport configuration_contribution(const Configuration& cfg)
{
    ConfigurationReport r;
    r.configuration = cfg;
    const int d = cfg.cover_degree;
    AlphaMonomial base = base_contribution(d);
    r.per_factor_trace.push_back({"base", base});
    AlphaMonomial z = detail::trace_chain(*cfg.chain_zero, d, Side::zero, &r.per_factor_trace);
    AlphaMonomial w = detail::trace_chain(*cfg.chain_infinity, d, Side::infinity, &r.per_factor_trace);
    r.total = base * z * w;
    if (!r.total.is_zero() && r.total.power != 0)
        throw DegreeViolation("configuration total has alpha power " + std::to_string(r.total.power) + ": "
                              + describe(*cfg.chain_zero) + " | " + describe(*cfg.chain_infinity));
    return r;
}

inline PsiLinear side_sum(int d, Side side)
{
    AlphaMonomial s;
    for (const Chain& c : enumerate_chains(d)) s = s + chain_contribution(c, d, side);
    return s;
}

enum class Strategy {
    automatic,  // pairwise up to kPairwiseLimit configurations, factorized above
    pairwise,   // explicit sum over the Cartesian product
    factorized, // base * (sum over zero side) * (sum over infinity side)
};

inline constexpr std::size_t kPairwiseLimit = 100'000'000;

struct EvalOptions {
    unsigned threads = 1;
    Strategy strategy = Strategy::automatic;
    // Optional visiting order over configuration indices; must be a
    // permutation of 0..size-1 when given.
    const std::vector<std::size_t>* order = nullptr;
};

/// Exact invariant for cover degree d.
///
/// Every configuration total is base * z_i * w_j where z_i and w_j are the
/// side-chain products.  Those are put over one common denominator L, so the
/// pairwise sum runs on integers: sum a_i * b_j, then one division by L^2.
inline BigRational multiple_cover_invariant(int d, const EvalOptions& opt = {})
{
    const ConfigurationList cfgs = enumerate_configurations(d);
    const std::vector<Chain>& chains = cfgs.chains();
    const std::size_t n = chains.size();

    std::vector<AlphaMonomial> zero(n), inf(n);
    BigInt L = 1;
    for (std::size_t i = 0; i < n; ++i) {
        zero[i] = chain_contribution(chains[i], d, Side::zero);
        inf[i] = chain_contribution(chains[i], d, Side::infinity);
        mpz_lcm(L.get_mpz_t(), L.get_mpz_t(), zero[i].coeff.get_den_mpz_t());
    }
    const AlphaMonomial base = base_contribution(d);
    for (std::size_t i = 0; i < n; ++i)
        if (!zero[i].is_zero() && base.power + 2 * zero[i].power != 0)
            throw DegreeViolation("chain " + describe(chains[i]) + " has the wrong alpha power");

    std::vector<BigInt> a(n), b(n);
    for (std::size_t i = 0; i < n; ++i) {
        a[i] = zero[i].coeff.get_num() * (L / zero[i].coeff.get_den());
        b[i] = inf[i].coeff.get_num() * (L / inf[i].coeff.get_den());
    }

    Strategy how = opt.strategy;
    if (how == Strategy::automatic) how = cfgs.size() <= kPairwiseLimit ? Strategy::pairwise : Strategy::factorized;

    BigInt total = 0;
    if (how == Strategy::factorized) {
        BigInt sa = 0, sb = 0;
        for (std::size_t i = 0; i < n; ++i) {
            sa += a[i];
            sb += b[i];
        }
        total = sa * sb;
    } else {
        const std::size_t count = cfgs.size();
        if (opt.order && opt.order->size() != count) throw std::invalid_argument("order is not a permutation");
        const unsigned T = opt.threads == 0 ? 1 : opt.threads;
        std::vector<BigInt> partial(T);
        auto work = [&](unsigned t) {
            const std::size_t lo = count * t / T, hi = count * (t + 1) / T;
            mpz_ptr acc = partial[t].get_mpz_t();
            for (std::size_t x = lo; x < hi; ++x) {
                const std::size_t idx = opt.order ? (*opt.order)[x] : x;
                mpz_addmul(acc, a[cfgs.zero_index(idx)].get_mpz_t(), b[cfgs.infinity_index(idx)].get_mpz_t());
            }
        };
        if (T == 1) {
            work(0);
        } else {
            std::vector<std::thread> pool;
            for (unsigned t = 0; t < T; ++t) pool.emplace_back(work, t);
            for (auto& th : pool) th.join();
        }
        for (const BigInt& p : partial) total += p;
    }
    return BigRational(base.coeff * make_rational(total, L * L));
}

} // namespace mcover
