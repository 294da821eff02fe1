// SPDX-License-Identifier: MIT
#pragma once

#include "exact.hpp"

#include <algorithm>
#include <array>
#include <cstddef>
#include <memory>
#include <stdexcept>
#include <string>
#include <tuple>
#include <vector>

namespace mcover {

/// Where a bubble map meets the divisor shared with the previous component.
enum class Contact { P0, P1, P2 };

/// Family(h,k) with d+h = 2k, or one of the two isolated monomial maps.
enum class Shape { Family, MonoH, MonoK };

inline const char* name(Contact c)
{
    switch (c) {
    case Contact::P0: return "P0";
    case Contact::P1: return "P1";
    case Contact::P2: return "P2";
    }
    return "?";
}

inline const char* name(Shape s)
{
    switch (s) {
    case Shape::Family: return "Family";
    case Shape::MonoH: return "MonoH";
    case Shape::MonoK: return "MonoK";
    }
    return "?";
}

struct UnsupportedDegree : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct InvalidKind : std::invalid_argument {
    using std::invalid_argument::invalid_argument;
};

struct FixedMapKind {
    Contact contact = Contact::P0;
    int degree = 0;
    Shape shape = Shape::MonoK;
    int h = 0; // unused (0) for MonoK
    int k = 0; // unused (0) for MonoH
    bool is_end_bubble = false;

    auto key() const { return std::make_tuple(contact, shape, h, k, degree, is_end_bubble); }
    friend bool operator==(const FixedMapKind& a, const FixedMapKind& b) { return a.key() == b.key(); }
    friend bool operator<(const FixedMapKind& a, const FixedMapKind& b) { return a.key() < b.key(); }
};

inline std::string describe(const FixedMapKind& m)
{
    std::string s = std::string(name(m.contact)) + "/" + name(m.shape) + "(d=" + std::to_string(m.degree);
    if (m.shape != Shape::MonoK) s += ",h=" + std::to_string(m.h);
    if (m.shape != Shape::MonoH) s += ",k=" + std::to_string(m.k);
    s += ")";
    if (m.is_end_bubble) s += "/end";
    return s;
}

/// Exponent of the monomial sitting in the slot that touches the next
/// exceptional divisor; it is the degree of the next bubble map.
inline int outgoing_exponent(const FixedMapKind& m) { return m.shape == Shape::MonoK ? m.k : m.h; }

/// Contact label of the next bubble: the coordinate that carries the
/// outgoing monomial.
inline Contact next_contact(const FixedMapKind& m)
{
    switch (m.contact) {
    case Contact::P0: return m.shape == Shape::MonoK ? Contact::P2 : Contact::P1;
    case Contact::P1: return m.shape == Shape::MonoK ? Contact::P2 : Contact::P0;
    case Contact::P2: return m.shape == Shape::MonoH ? Contact::P0 : Contact::P1;
    }
    return Contact::P0;
}

/// Rows of the end-bubble table.  For the first two contact blocks only the
/// family with h = 1, the h = 1 monomial at even d, and the quadratic d = 2
/// maps occur; every row of the third block occurs.
inline bool has_end_row(const FixedMapKind& m)
{
    if (outgoing_exponent(m) != 1) return false;
    if (m.contact == Contact::P2) return true;
    switch (m.shape) {
    case Shape::Family: return true;
    case Shape::MonoH: return m.degree % 2 == 0;
    case Shape::MonoK: return m.degree == 2;
    }
    return false;
}

/// Checks the row constraints of the fixed-point table (shape, exponents,
/// parity) without looking at the end-bubble flag.
inline void validate_row(const FixedMapKind& m)
{
    const int d = m.degree;
    auto bad = [&](const char* why) { throw InvalidKind(describe(m) + ": " + why); };
    if (d < 2) bad("degree below 2");
    switch (m.shape) {
    case Shape::Family:
        if (m.contact == Contact::P2) bad("no family at contact P2");
        if (d + m.h != 2 * m.k) bad("family needs d+h=2k");
        if (m.h < 1 || m.h > d - 1 || m.k < 1 || m.k > d - 1) bad("exponent out of range");
        break;
    case Shape::MonoH:
        if (m.h < 1 || m.h > d - 1) bad("exponent out of range");
        if (m.contact != Contact::P2 && (d - m.h) % 2 == 0) bad("h = d (mod 2) belongs to the family");
        break;
    case Shape::MonoK:
        if (m.k < 1 || m.k > d - 1) bad("exponent out of range");
        break;
    }
}

/// Row constraints plus consistency of the end-bubble flag.
inline void validate(const FixedMapKind& m)
{
    validate_row(m);
    if (m.is_end_bubble != has_end_row(m))
        throw InvalidKind(describe(m) + (m.is_end_bubble ? ": not an end-bubble row" : ": must be an end bubble"));
}

/// Torus weights on V^4 in units of alpha, in the order they are tabulated.
/// The first entry always belongs to the coordinate carrying x^d.
inline std::array<BigRational, 4> v4_weights(const FixedMapKind& m)
{
    validate_row(m);
    const long d = m.degree, h = m.h, k = m.k;
    auto q = [](long a, long b) { return make_rational(a, b); };
    switch (m.contact) {
    case Contact::P0:
        if (m.shape == Shape::Family) return {q(d, d - k), q(h, d - k), q(k, d - k), q(0, 1)};
        if (m.shape == Shape::MonoH) return {q(2 * d, d - h), q(2 * h, d - h), q(h + d, d - h), q(0, 1)};
        return {q(d, d - k), q(2 * k - d, d - k), q(k, d - k), q(0, 1)};
    case Contact::P1:
        if (m.shape == Shape::Family) return {q(-d, d - k), q(-h, d - k), q(-k, d - k), q(0, 1)};
        if (m.shape == Shape::MonoH) return {q(-2 * d, d - h), q(-2 * h, d - h), q(-h - d, d - h), q(0, 1)};
        return {q(-d, d - k), q(d - 2 * k, d - k), q(-k, d - k), q(0, 1)};
    case Contact::P2:
        if (m.shape == Shape::MonoH) return {q(-d, d - h), q(-h, d - h), q(h - 2 * d, d - h), q(0, 1)};
        return {q(d, d - k), q(2 * d - k, d - k), q(k, d - k), q(0, 1)};
    }
    throw InvalidKind(describe(m));
}

enum class NodeEnd { node_in, node_out };

/// Weight (in units of alpha) of the source tangent line at either node of a
/// bubble component.  The source acts by t.[x;y] = [t^w x; y] with w fixed by
/// requiring the x^d coordinate to scale with its V^4 weight, so w is that
/// weight divided by d.  The two ends of a P^1 carry opposite weights.
inline BigRational source_tangent_weight(const FixedMapKind& m, NodeEnd end)
{
    BigRational w = v4_weights(m)[0] / m.degree;
    return end == NodeEnd::node_out ? w : BigRational(-w);
}

/// Tangent weight of the degree-d base component at its node over 0.
inline BigRational base_tangent_weight(int d) { return make_rational(-1, d); }

// ---------------------------------------------------------------------------
// Chains and configurations

struct Chain {
    std::vector<FixedMapKind> steps;

    friend bool operator==(const Chain& a, const Chain& b) { return a.steps == b.steps; }
    friend bool operator<(const Chain& a, const Chain& b)
    {
        if (a.steps.size() != b.steps.size()) return a.steps.size() < b.steps.size();
        return a.steps < b.steps;
    }
};

inline std::string describe(const Chain& c)
{
    std::string s = "[";
    for (std::size_t i = 0; i < c.steps.size(); ++i) {
        if (i) s += " ";
        s += describe(c.steps[i]);
    }
    return s + "]";
}

/// All rows of the fixed-point table for a given incoming contact and degree.
inline std::vector<FixedMapKind> kinds_at(Contact c, int d)
{
    std::vector<FixedMapKind> out;
    auto push = [&](Shape s, int h, int k) {
        FixedMapKind m{c, d, s, h, k, false};
        m.is_end_bubble = has_end_row(m);
        out.push_back(m);
    };
    if (c != Contact::P2)
        for (int h = 1; h < d; ++h)
            if ((d + h) % 2 == 0) push(Shape::Family, h, (d + h) / 2);
    for (int h = 1; h < d; ++h)
        if (c == Contact::P2 || (d - h) % 2 == 1) push(Shape::MonoH, h, 0);
    for (int k = 1; k < d; ++k) push(Shape::MonoK, 0, k);
    return out;
}

namespace detail {

// prev is the outgoing tangent weight of the previous component; a chain whose
// node would carry total weight zero is a boundary point of a family and is
// never emitted on its own.
inline void grow(Contact c, int d, const BigRational& prev, std::vector<FixedMapKind>& stack, std::vector<Chain>& out)
{
    for (const FixedMapKind& m : kinds_at(c, d)) {
        if (prev + source_tangent_weight(m, NodeEnd::node_in) == 0) continue;
        const int e = outgoing_exponent(m);
        if (e == 1 && !m.is_end_bubble) continue;
        stack.push_back(m);
        if (m.is_end_bubble)
            out.push_back(Chain{stack});
        else
            grow(next_contact(m), e, source_tangent_weight(m, NodeEnd::node_out), stack, out);
        stack.pop_back();
    }
}

} // namespace detail

/// Chains of bubbles hanging off one side of a degree-d base, sorted.
inline std::vector<Chain> enumerate_chains(int d)
{
    if (d < 2) throw UnsupportedDegree("degree must be at least 2");
    std::vector<Chain> out;
    std::vector<FixedMapKind> stack;
    detail::grow(Contact::P0, d, base_tangent_weight(d), stack, out);
    std::sort(out.begin(), out.end());
    return out;
}

struct Configuration {
    int cover_degree = 0;
    const Chain* chain_zero = nullptr;
    const Chain* chain_infinity = nullptr;
};

/// The Cartesian product of the side chains, indexed lazily: element i pairs
/// zero-side chain i / n with infinity-side chain i % n.  Copies share the
/// chain storage, so Configuration pointers stay valid while any copy lives.
class ConfigurationList {
public:
    ConfigurationList(int d, std::vector<Chain> chains)
        : d_(d), chains_(std::make_shared<const std::vector<Chain>>(std::move(chains)))
    {
    }

    int degree() const { return d_; }
    const std::vector<Chain>& chains() const { return *chains_; }
    std::size_t size() const { return chains_->size() * chains_->size(); }

    Configuration operator[](std::size_t i) const
    {
        const std::size_t n = chains_->size();
        return {d_, &(*chains_)[i / n], &(*chains_)[i % n]};
    }

    std::size_t zero_index(std::size_t i) const { return i / chains_->size(); }
    std::size_t infinity_index(std::size_t i) const { return i % chains_->size(); }

private:
    int d_;
    std::shared_ptr<const std::vector<Chain>> chains_;
};

inline ConfigurationList enumerate_configurations(int d) { return {d, enumerate_chains(d)}; }

} // namespace mcover
