"""Orbit data, sgn, s_bp and r_pxa exponents for GL_n, written independently
of the C++ code.  The group is modelled by pairs (x, y) = s^x Q^y with y an
integer; roots are pairs (i, j) of Z/n.  Emits a C++ table to stdout.

r_pxa is reported as the exponent e with value chi_a(v0)-product = c^e, where
c is -1 for symmetric non-singleton orbits and chi_a(omega) for the singleton.
"""
import sys

from sympy import factorint
from sympy.combinatorics import Permutation


def prime_power(q):
    f = factorint(q)
    if len(f) != 1:
        return None
    (p, e), = f.items()
    return p, e


def q_orbits(n, q):
    seen, out = set(), []
    for a in range(1, n):
        if a in seen:
            continue
        orb, b = [], a
        while True:
            orb.append(b)
            seen.add(b)
            b = b * q % n
            if b == a:
                break
        out.append(orb)
    return out


def classify(n, q):
    rows = {}
    for orb in q_orbits(n, q):
        a = orb[0]
        sym = (n - a) % n in orb
        if not sym:
            kind, m = "asymmetric", len(orb)
        elif len(orb) == 1:
            kind, m = "symmetric_singleton", 1
        else:
            kind, m = "symmetric_nonsingleton", orb.index(n - a)
        for b in orb:
            rows[b] = (kind, m, min(orb))
    xi, covered = [], set()
    for orb in sorted(q_orbits(n, q), key=min):
        if min(orb) in covered:
            continue
        xi.append(min(orb))
        for b in orb:
            covered.add(b)
            covered.add(n - b)
    return rows, xi


def sgn(n, q):
    return Permutation([i * q % n for i in range(n)]).signature()


class Gamma:
    def __init__(self, n, q):
        self.n, self.q = n, q
        self.f = 1
        while pow(q, self.f, n) != 1:
            self.f += 1

    def qp(self, y):
        return pow(self.q, y % self.f, self.n)

    def mul(self, a, b):
        return ((a[0] + self.qp(a[1]) * b[0]) % self.n, a[1] + b[1])

    def inv(self, a):
        return ((-self.qp(-a[1]) * a[0]) % self.n, -a[1])

    def act(self, g, r):
        return tuple((self.qp(g[1]) * i + g[0]) % self.n for i in r)

    def finite(self):
        return [(x, y) for x in range(self.n) for y in range(self.f)]


def reps(G, kind, m, n):
    if kind == "symmetric_singleton":
        return [(k, 0) for k in range(n // 2)]
    return [(k, t) for t in range(m) for k in range(n)]


def s_bp(G, a, kind, m, sigma):
    n = G.n
    eta = (0, a)
    p = {}
    for g in reps(G, kind, m, n):
        r = G.act(g, eta)
        p[r] = 1
        p[(r[1], r[0])] = -1
    orbit = {G.act(g, eta) for g in G.finite()} | {G.act(g, (a, 0)) for g in G.finite()}
    assert orbit == set(p), (n, G.q, a)
    sinv = G.inv(sigma)
    diag = [1] * n
    for lam in orbit:
        if not lam[0] < lam[1]:
            continue
        mu = G.act(sinv, lam)
        c1 = not mu[0] < mu[1] and p[lam] == 1 and p[mu] == 1
        c2 = mu[0] < mu[1] and p[lam] == -1 and p[mu] == 1
        if c1 or c2:
            diag[lam[0]] *= -1
            diag[lam[1]] *= -1
    return diag[0]


def r_exp(G, a, kind, m, sigma):
    n = G.n
    eta, neg = (0, a), (a, 0)
    R = reps(G, kind, m, n)
    h = (a % n, m)
    total = 0
    for gi in R:
        lam = G.act(gi, eta)
        e = (lam[0] == 0) - (lam[1] == 0)
        if e == 0:
            continue
        left = G.mul(G.inv(gi), sigma)
        us = [G.mul(left, gj) for gj in R if G.act(G.mul(left, gj), eta) in (eta, neg)]
        assert len(us) == 1
        u = us[0]
        cands = [u] + ([G.mul(u, h)] if kind != "asymmetric" else [])
        v0s = [c for c in cands if G.act(c, eta) == eta]
        assert len(v0s) == 1
        v0 = v0s[0]
        assert v0[0] == 0
        if kind == "asymmetric":
            continue
        if kind == "symmetric_nonsingleton":
            assert v0[1] % (2 * m) == 0
            total += e * (v0[1] // (2 * m))
        else:
            total += e * v0[1]
    return total


def main(max_n=12, max_q=49):
    print("// generated by tests/oracles/gln_orbits.py")
    print("// n, q, a, type, m, sgn, s_bp(s), s_bp(Q), r_exp(s), r_exp(Q)")
    for n in range(2, max_n + 1):
        for q in range(3, max_q + 1):
            pp = prime_power(q)
            if pp is None or pp[0] == 2 or n % pp[0] == 0:
                continue
            rows, xi = classify(n, q)
            G = Gamma(n, q)
            sg = sgn(n, q)
            for a in xi:
                kind, m, _ = rows[a]
                vals = [s_bp(G, a, kind, m, (1, 0)), s_bp(G, a, kind, m, (0, 1)),
                        r_exp(G, a, kind, m, (1, 0)), r_exp(G, a, kind, m, (0, 1))]
                print("{%d, %d, %d, DaggerType::%s, %d, %d, %d, %d, %d, %d}," % ((n, q, a, kind, m, sg) + tuple(vals)))


if __name__ == "__main__":
    main(*(int(v) for v in sys.argv[1:]))
