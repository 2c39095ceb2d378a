#!/usr/bin/env python3
"""Write two permutation generators of PSU(3,3) acting on 28 points.

The 28 points are the isotropic points of the Hermitian form
x*x^3 + y*y^3 + z*z^3 on PG(2,9).  SU(3,3) has trivial centre, so it acts
faithfully on them and the permutation group has order 6048.

Usage: make_psu33_gens.py [seed] > data/groups/psu33.gens
"""
import itertools
import random
import sys

# GF(9) = GF(3)[i]/(i^2 + 1); element a + b*i is encoded as 3*b + a.
def add(u, v):
    return 3 * ((u // 3 + v // 3) % 3) + (u % 3 + v % 3) % 3


def mul(u, v):
    a, b = u % 3, u // 3
    c, d = v % 3, v // 3
    return 3 * ((a * d + b * c) % 3) + (a * c - b * d) % 3


def power(u, e):
    r = 1
    for _ in range(e):
        r = mul(r, u)
    return r


def conj(u):
    return power(u, 3)


INV = {u: next(v for v in range(1, 9) if mul(u, v) == 1) for u in range(1, 9)}


def hermitian(v):
    s = 0
    for x in v:
        s = add(s, mul(x, conj(x)))
    return s


def normalize(v):
    lead = next(x for x in v if x)
    s = INV[lead]
    return tuple(mul(s, x) for x in v)


def vec_mat(v, m):
    out = []
    for j in range(3):
        s = 0
        for i in range(3):
            s = add(s, mul(v[i], m[i][j]))
        out.append(s)
    return tuple(out)


def det(m):
    def neg(x):
        return mul(x, 3 * 0 + 2)
    t = 0
    for p in itertools.permutations(range(3)):
        sign = 1
        for i in range(3):
            for j in range(i + 1, 3):
                if p[i] > p[j]:
                    sign = -sign
        term = 1
        for i in range(3):
            term = mul(term, m[i][p[i]])
        t = add(t, term if sign > 0 else neg(term))
    return t


def is_unitary(m):
    # rows orthonormal for the standard Hermitian form
    for i in range(3):
        for j in range(3):
            s = 0
            for k in range(3):
                s = add(s, mul(m[i][k], conj(m[j][k])))
            if s != (1 if i == j else 0):
                return False
    return True


def closure_order(gens, cap=10000):
    ident = tuple(range(len(gens[0])))
    seen = {ident}
    frontier = [ident]
    while frontier:
        nxt = []
        for e in frontier:
            for s in gens:
                p = tuple(s[e[x]] for x in range(len(e)))
                if p not in seen:
                    seen.add(p)
                    nxt.append(p)
                    if len(seen) > cap:
                        return len(seen)
        frontier = nxt
    return len(seen)


def main():
    rng = random.Random(int(sys.argv[1]) if len(sys.argv) > 1 else 1)
    points = sorted({normalize(v) for v in itertools.product(range(9), repeat=3)
                     if any(v) and hermitian(v) == 0})
    assert len(points) == 28, len(points)
    index = {p: i for i, p in enumerate(points)}

    unitary = []
    while len(unitary) < 40:
        m = [[rng.randrange(9) for _ in range(3)] for _ in range(3)]
        if is_unitary(m) and det(m) == 1:
            unitary.append(m)

    perms = [[index[normalize(vec_mat(p, m))] for p in points] for m in unitary]
    for a, b in itertools.combinations(perms, 2):
        if closure_order([a, b]) == 6048:
            print("# PSU(3,3) = SU(3,3) on the 28 isotropic points of PG(2,9)")
            print("# generated by tools/make_psu33_gens.py; expected order 6048")
            print(28)
            print(" ".join(map(str, a)))
            print(" ".join(map(str, b)))
            return
    sys.exit("no generating pair found")


if __name__ == "__main__":
    main()
