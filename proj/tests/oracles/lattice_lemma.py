"""Coinvariant and fixed-point orders for random cyclic-by-cyclic lattice
modules, computed with sympy independently of the C++ code.  |M_A^B| is
found by enumerating the torsion subgroup of M_A in Smith coordinates.
Also emits |X_Gamma| and |X_I^Fr| for the GL_n cocharacter lattice.
Emits C++ initializer rows to stdout.
"""
import itertools
import random
import sys

from sympy import Matrix, ZZ, eye, zeros
from sympy.matrices.normalforms import smith_normal_decomp


def signed_perm(rng, r):
    perm = list(range(r))
    rng.shuffle(perm)
    m = zeros(r, r)
    for j in range(r):
        m[perm[j], j] = rng.choice((1, -1))
    return m


def order(g, limit=64):
    p = g
    for k in range(1, limit + 1):
        if p == eye(g.rows):
            return k
        p = p * g
    return 0


def unimodular(rng, r):
    w = eye(r)
    for _ in range(3):
        i, j = rng.randrange(r), rng.randrange(r)
        if i != j:
            e = eye(r)
            e[i, j] = rng.choice((-1, 0, 1))
            w = w * e
    return w


def instance(rng, max_rank=5, max_order=6):
    while True:
        r = rng.randint(1, max_rank)
        b = signed_perm(rng, r)
        ob = order(b)
        k = rng.choice([d for d in range(1, ob + 1) if ob % d == 0])
        a = b ** k
        oa = order(a)
        if oa > max_order or k > max_order:
            continue
        if rng.random() < 0.5:
            b = -b
        group = [a ** j for j in range(oa)]
        ob = next(j for j in range(1, 2 * k + 1) if b ** j in group)
        w = unimodular(rng, r)
        return w * a * w.inv(), oa, w * b * w.inv(), ob


def smith(m):
    if m.cols == 0:
        return zeros(m.rows, 0), eye(m.rows), zeros(0, 0)
    return smith_normal_decomp(m, domain=ZZ)


def coinv(r, gens):
    rel = Matrix.hstack(*[g - eye(r) for g in gens]) if gens else zeros(r, 0)
    if r == 0:
        return 0, 1
    D, _, _ = smith(rel)
    ds = [abs(D[i, i]) for i in range(min(D.shape)) if D[i, i] != 0]
    t = 1
    for d in ds:
        t *= d
    return r - len(ds), t


def fixed_basis(r, gens):
    stacked = Matrix.vstack(*[g - eye(r) for g in gens])
    D, U, V = smith(stacked)
    rank = sum(1 for i in range(min(D.shape)) if D[i, i] != 0)
    return V[:, rank:]


def a_coinv_b_fixed(a, b):
    r = a.rows
    D, U, V = smith(a - eye(r))
    d = [D[i, i] if i < min(D.shape) else 0 for i in range(r)]
    bq = U * b * U.inv()
    tors = [i for i in range(r) if abs(d[i]) > 1]
    count = 0
    for vals in itertools.product(*[range(abs(d[i])) for i in tors]):
        y = zeros(r, 1)
        for i, v in zip(tors, vals):
            y[i] = v
        z = bq * y - y
        ok = True
        for i in range(r):
            if d[i] == 0:
                ok = ok and z[i] == 0
            else:
                ok = ok and z[i] % d[i] == 0
        count += ok
    return count


def lemma(a, b):
    r = a.rows
    if fixed_basis(r, [a, b]).cols > 0:
        return 1, 0, 0, 0
    free, cg = coinv(r, [a, b])
    assert free == 0
    ab = a_coinv_b_fixed(a, b)
    na = fixed_basis(r, [a])
    bn = (na.T * na).inv() * na.T * b * na
    free, abc = coinv(na.cols, [bn])
    assert free == 0
    return 0, cg, ab, abc


def gln_lattice(n, q):
    def quot(pi):
        m = zeros(n - 1, n - 1)
        for j in range(n - 1):
            t = pi[j]
            if t < n - 1:
                m[t, j] = 1
            else:
                for i in range(n - 1):
                    m[i, j] = -1
        return m
    return quot([(i + 1) % n for i in range(n)]), quot([q * i % n for i in range(n)])


def main(count=80, seed=2024):
    rng = random.Random(seed)
    print("// generated by tests/oracles/lattice_lemma.py")
    print("// rank, a, order_a, b, order_b, violated, |M_Gamma|, |M_A^B|, |M^A_B|")
    for _ in range(count):
        a, oa, b, ob = instance(rng)
        v = lemma(a, b)
        print("{%d, {%s}, %d, {%s}, %d, %d, %d, %d, %d}," % (
            a.rows, ", ".join(str(x) for x in a), oa, ", ".join(str(x) for x in b), ob, *v))


if __name__ == "__main__":
    if len(sys.argv) > 1 and sys.argv[1] == "gln":
        print("// generated by tests/oracles/lattice_lemma.py gln")
        print("// n, q, |X_Gamma|, |X_I^Fr|")
        for n in range(2, 13):
            for q in (3, 5, 7, 9, 11, 13, 25, 27, 49):
                p = min(d for d in range(2, q + 1) if q % d == 0)
                if n % p == 0:
                    continue
                a, b = gln_lattice(n, q)
                _, xg = coinv(n - 1, [a, b])
                xi = a_coinv_b_fixed(a, b)
                print("{%d, %d, %d, %d}," % (n, q, xg, xi))
    else:
        main()
