"""Numeric quadratic Gauss sums over F_q, built independently of the C++
field code (sympy supplies the irreducible polynomial).  Prints the snapped
lambda value q^(-1/2) sum (x/q) zeta_p^Tr(x) for the standard character."""
import cmath
import itertools
import math

from sympy import ZZ, Poly, symbols
from sympy.polys.galoistools import gf_irreducible_p

x = symbols("x")


def field(p, f):
    if f == 1:
        mod = [1, 0]
    else:
        for tail in itertools.product(range(p), repeat=f):
            cand = [1] + list(tail)
            if gf_irreducible_p(cand, p, ZZ):
                mod = cand
                break
    return mod


def mulmod(a, b, mod, p):
    pa = Poly(a, x, modulus=p)
    pb = Poly(b, x, modulus=p)
    pm = Poly(mod, x, modulus=p)
    return (pa * pb).rem(pm)


def lam(p, f):
    q = p ** f
    mod = field(p, f)
    elems = list(itertools.product(range(p), repeat=f))
    pm = Poly(mod, x, modulus=p)

    def to_poly(e):
        return Poly(list(e), x, modulus=p)

    def trace(e):
        y = to_poly(e)
        t = Poly(0, x, modulus=p)
        for _ in range(f):
            t = t + y
            y = (y ** p).rem(pm)
        c = t.all_coeffs()
        return int(c[-1]) % p if c else 0

    def is_square(e):
        y = to_poly(e)
        z = (y ** ((q - 1) // 2)).rem(pm)
        return z == Poly(1, x, modulus=p)

    g = 0
    for e in elems:
        if all(c == 0 for c in e):
            continue
        s = 1 if is_square(e) else -1
        g += s * cmath.exp(2j * math.pi * trace(e) / p)
    return g / math.sqrt(q)


for p, f in [(3, 1), (5, 1), (7, 1), (11, 1), (13, 1), (3, 2), (3, 3), (5, 2), (7, 2)]:
    z = lam(p, f)
    snapped = min(["1", "-1", "i", "-i"], key=lambda s: abs(z - {"1": 1, "-1": -1, "i": 1j, "-i": -1j}[s]))
    print(p ** f, snapped, round(z.real, 9), round(z.imag, 9))
