#!/usr/bin/env python3
# SPDX-License-Identifier: MIT
"""Independent reference evaluator built on fractions.Fraction.

Regenerates tests/golden/oracle_values.tsv.  The C++ suite only reads the
frozen file; this script is kept so the numbers can be re-derived by hand.

    python3 tests/oracle/oracle.py > tests/golden/oracle_values.tsv
    python3 tests/oracle/oracle.py --check tests/golden/oracle_values.tsv
"""
import sys
from fractions import Fraction as Q
from math import factorial, ceil


def dfact(n):
    r = 1
    while n > 1:
        r *= n
        n -= 2
    return r


def rows(c, d):
    """All fixed-map rows with incoming contact c and degree d."""
    out = []
    if c in (0, 1):
        out += [(c, 'F', d, h, (d + h) // 2) for h in range(1, d) if (d + h) % 2 == 0]
        out += [(c, 'H', d, h, None) for h in range(1, d) if (d - h) % 2 == 1]
    else:
        out += [(c, 'H', d, h, None) for h in range(1, d)]
    out += [(c, 'K', d, None, k) for k in range(1, d)]
    return out


def outgoing(r):
    c, s, d, h, k = r
    e = k if s == 'K' else h
    if c == 0:
        nc = 2 if s == 'K' else 1
    elif c == 1:
        nc = 2 if s == 'K' else 0
    else:
        nc = 0 if s == 'H' else 1
    return nc, e


def end_row_exists(r):
    c, s, d, h, k = r
    if c == 2:
        return True
    if s == 'F':
        return h == 1
    if s == 'H':
        return h == 1 and d % 2 == 0
    return k == 1 and d == 2


def sigma(r):
    c, s, d, h, k = r
    if c == 2:
        return Q(-1, d - h) if s == 'H' else Q(1, d - k)
    sg = 1 if c == 0 else -1
    return sg * (Q(2, d - h) if s == 'H' else Q(1, d - k))


def chains(c, d):
    for r in rows(c, d):
        nc, e = outgoing(r)
        if e == 1:
            if end_row_exists(r):
                yield [r]
            continue
        for rest in chains(nc, e):
            yield [r] + rest


def ruled(r):
    """Returns (coefficient, alpha power) of the full ruled-bubble factor."""
    c, s, d, h, k = r
    if s == 'F':
        S = sum(Q(i, h - i) + Q(i, k - i) + Q(i, d - i) for i in range(h))
        m = (-1) ** (h + k) * Q(1, factorial(d - h) * factorial(d - k)) ** 2 \
            * Q(1, d - k) ** (3 * h - 3 * d - 1) * S
        m *= Q(-1, d - h)                 # psi integral
        a, p = Q(2, d - k), 3 * h - 3 * d - 1
    elif s == 'H' and c != 2:
        m = (-1) ** (d + ceil(Q(d + h, 2))) * 2 ** (d - h) \
            * Q(1, factorial(d - h) * dfact(d - h)) ** 2 * Q(2, d - h) ** (3 * h - 3 * d - 1)
        a, p = Q(2, d - h), 3 * h - 3 * d - 1
    elif s == 'H':
        m = Q(-1, d - h) * Q(1, factorial(d - h) * factorial(2 * d - 2 * h)) \
            * Q(1, d - h) ** (3 * h - 3 * d - 1)
        a, p = Q(2, d - h), 3 * h - 3 * d - 1
    else:
        sg = -1 if c == 0 else (-1) ** (d + k)
        m = Q(sg, d - k) * Q(1, factorial(d - k) * factorial(2 * d - 2 * k)) \
            * Q(1, d - k) ** (3 * k - 3 * d - 1)
        a, p = (Q(-1, d - k) if c != 2 else Q(2, d - k)), 3 * k - 3 * d - 1
    return m * a, p + 2


def end(r):
    c, s, d, h, k = r
    p = 3 - 3 * d
    if c != 2 and s == 'F':
        m = (-1) ** (k + 1) * Q(1, factorial(d - 1) * factorial(d - k)) ** 2 * Q(1, d - k) ** p
        m *= Q(1, d - k)                  # pairing with the dual of psi
    elif c != 2 and s == 'H':
        m = (-1) ** (d + ceil(Q(d + 1, 2))) * 2 ** d \
            * Q(1, factorial(d - 1) * dfact(d - 1)) ** 2 * Q(2, d - 1) ** p
    elif c != 2:
        m, p = Q(-1, 2), -3
    else:
        sg = -1 if s == 'H' else (-1) ** (d - 1)
        m = Q(sg, d - 1) * Q(1, factorial(d - 1) * factorial(2 * d - 2)) * Q(1, d - 1) ** p
    return m * Q(1, d - 1), p


def chain_value(ch, d):
    prev, v, p = Q(-1, d), Q(1), 0
    for i, r in enumerate(ch):
        s = sigma(r)
        if s == prev:
            return None
        v, p = v / (prev - s), p - 1
        m, q = end(r) if i == len(ch) - 1 else ruled(r)
        v, p = v * m, p + q
        prev = s
    return v, p


def base(d):
    return Q((-1) ** (3 * d - 1), d) * Q(factorial(d) * factorial(2 * d), d ** (3 * d)) ** 2


def side(d):
    vals = [chain_value(ch, d) for ch in chains(0, d)]
    vals = [v for v in vals if v is not None]
    assert all(p == 2 - 3 * d for _, p in vals)
    return sum((v for v, _ in vals), Q(0)), len(vals)


def golden():
    lines = ['# key\td\tvalue   (generated by tests/oracle/oracle.py)']
    for d in range(1, 10):
        lines.append('base\t%d\t%s' % (d, base(d)))
    for d in range(2, 10):
        s, n = side(d)
        flip = -1 if d % 2 else 1       # alpha -> -alpha on a power 2-3d value
        lines.append('chains\t%d\t%d' % (d, n))
        lines.append('configs\t%d\t%d' % (d, n * n))
        lines.append('side\t%d\t%s' % (d, s))
        lines.append('invariant\t%d\t%s' % (d, base(d) * s * s * flip))
    return '\n'.join(lines) + '\n'


if __name__ == '__main__':
    text = golden()
    if len(sys.argv) == 3 and sys.argv[1] == '--check':
        with open(sys.argv[2]) as f:
            sys.exit(0 if f.read() == text else 'golden file is stale')
    sys.stdout.write(text)
