#!/usr/bin/env python3
"""Independent recomputation of the values frozen into tests/test_oracle_values.cpp.

Plain Python, no shared code with the C++ library: matrices are tuples,
groups are grown by breadth-first search over Python sets, and the
symplectic root elements are written out from the Gram matrix below rather
than taken from the library's sign table.
"""

import itertools
import json
import sys
from fractions import Fraction


def ideal_closure(moduli, gens):
    ring = list(itertools.product(*[range(m) for m in moduli]))
    cur = {tuple(0 for _ in moduli)} | {tuple(g) for g in gens}
    while True:
        nxt = set(cur)
        for x in cur:
            for y in cur:
                nxt.add(tuple((a + b) % m for a, b, m in zip(x, y, moduli)))
                nxt.add(tuple((a - b) % m for a, b, m in zip(x, y, moduli)))
            for r in ring:
                nxt.add(tuple((a * b) % m for a, b, m in zip(x, r, moduli)))
        if nxt == cur:
            return sorted(cur)
        cur = nxt


def c2_star_z(m):
    # every c lies in c^2 R + 2c R
    for c in range(m):
        reach = {(c * c * r + 2 * c * s) % m for r in range(m) for s in range(m)}
        if c not in reach:
            return False
    return True


def g2_roots():
    # simple roots a (short) and b (long) in the basis (a, b)
    pos = [(1, 0), (0, 1), (1, 1), (2, 1), (3, 1), (3, 2)]
    return pos + [(-x, -y) for x, y in pos]


def g2_long(r):
    return r in {(0, 1), (3, 1), (3, 2), (0, -1), (-3, -1), (-3, -2)}


def c2_roots():
    # e1 - e2 short, 2e2 long in coordinates over e1, e2
    return [(1, -1), (-1, 1), (1, 1), (-1, -1), (2, 0), (-2, 0), (0, 2), (0, -2)]


def span_type(roots, a, b):
    det = a[0] * b[1] - a[1] * b[0]
    sub = []
    for r in roots:
        p = Fraction(r[0] * b[1] - r[1] * b[0], det)
        q = Fraction(a[0] * r[1] - a[1] * r[0], det)
        if p.denominator == 1 and q.denominator == 1:
            sub.append(r)
    return {4: "A1xA1", 6: "A2", 8: "C2", 12: "G2"}[len(sub)]


def pair_scan(roots, long_pred):
    counts = {}
    long_pairs = set()
    for a in roots:
        for b in roots:
            if a[0] * b[1] - a[1] * b[0] == 0:
                continue
            t = span_type(roots, a, b)
            counts[t] = counts.get(t, 0) + 1
            if long_pred(a) and long_pred(b):
                long_pairs.add(t)
    return counts, sorted(long_pairs)


def c2_long_orbit():
    # reflections in e1 - e2 and 2e2
    def refl(v, a):
        k = 2 * (v[0] * a[0] + v[1] * a[1]) // (a[0] * a[0] + a[1] * a[1])
        return (v[0] - k * a[0], v[1] - k * a[1])

    seen = {(0, 2)}
    frontier = [(0, 2)]
    while frontier:
        v = frontier.pop()
        for a in [(1, -1), (0, 2)]:
            w = refl(v, a)
            if w not in seen:
                seen.add(w)
                frontier.append(w)
    return sorted(seen)


def matmul(x, y, n, m):
    return tuple(
        sum(x[i * n + k] * y[k * n + j] for k in range(n)) % m for i in range(n) for j in range(n)
    )


def identity(n):
    return tuple(1 if i == j else 0 for i in range(n) for j in range(n))


def elem(n, m, entries):
    e = list(identity(n))
    for (i, j), v in entries.items():
        e[i * n + j] = (e[i * n + j] + v) % m
    return tuple(e)


def inverse_unipotent(x, n, m):
    # x = I + N with N nilpotent: x^-1 = sum (-N)^k
    nmat = tuple((x[i] - identity(n)[i]) % m for i in range(n * n))
    neg = tuple((-v) % m for v in nmat)
    out = identity(n)
    p = identity(n)
    for _ in range(n):
        p = matmul(p, neg, n, m)
        out = tuple((a + b) % m for a, b in zip(out, p))
    return out


def bfs(gens, n, m, limit=10**7):
    gens = list(gens)
    seen = {identity(n)}
    frontier = [identity(n)]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = matmul(s, g, n, m)
                if h not in seen:
                    seen.add(h)
                    nxt.append(h)
        frontier = nxt
        if len(seen) > limit:
            raise RuntimeError("limit")
    return seen


def inv_of(g, group, n, m):
    e = identity(n)
    for h in group:
        if matmul(g, h, n, m) == e:
            return h
    raise RuntimeError("no inverse")


def sl3_root_elements(m, t):
    out = []
    for i in range(3):
        for j in range(3):
            if i != j:
                out.append(elem(3, m, {(i, j): t}))
    return out


def sp4_root_elements(m, t):
    # Gram matrix J = [[0, I], [-I, 0]] on basis e1, e2, f1, f2
    n = 4
    mats = [
        {(0, 1): t, (3, 2): -t},   # e1 - e2
        {(1, 0): t, (2, 3): -t},   # e2 - e1
        {(0, 3): t, (1, 2): t},    # e1 + e2
        {(3, 0): t, (2, 1): t},    # -e1 - e2
        {(0, 2): t},               # 2e1
        {(2, 0): t},               # -2e1
        {(1, 3): t},               # 2e2
        {(3, 1): t},               # -2e2
    ]
    out = []
    for e in mats:
        x = elem(n, m, e)
        check_symplectic(x, m)
        out.append(x)
    return out


def check_symplectic(x, m):
    n = 4
    j = [0] * 16
    j[0 * 4 + 2] = 1
    j[1 * 4 + 3] = 1
    j[2 * 4 + 0] = m - 1
    j[3 * 4 + 1] = m - 1
    j = tuple(j)
    xt = tuple(x[c * n + r] for r in range(n) for c in range(n))
    if matmul(matmul(xt, j, n, m), x, n, m) != j:
        raise RuntimeError("not symplectic")


def normal_closure(seed, conj, n, m):
    group = bfs(seed, n, m)
    conj_pairs = [(c, inverse_unipotent(c, n, m)) for c in conj]
    while True:
        extra = []
        for g in seed:
            for c, ci in conj_pairs:
                h = matmul(matmul(c, g, n, m), ci, n, m)
                if h not in group:
                    extra.append(h)
        if not extra:
            # group generated by seed is normalized by conj iff the seed's
            # conjugates already lie in it
            return group
        seed = seed + extra
        group = bfs(seed, n, m)


def kernel_size(group, n, m, level):
    e = identity(n)
    return all(all((g[i] - e[i]) % level == 0 for i in range(n * n)) for g in group)


def commutator_lower_bound(xs, ys, n, m, rounds, seed):
    import random

    rng = random.Random(seed)
    xs = list(xs)
    ys = list(ys)
    comms = []
    for _ in range(rounds):
        x = rng.choice(xs)
        y = rng.choice(ys)
        xi = inv_of_fast(x, n, m)
        yi = inv_of_fast(y, n, m)
        comms.append(matmul(matmul(matmul(x, y, n, m), xi, n, m), yi, n, m))
    return bfs(comms, n, m)


def inv_of_fast(g, n, m):
    # inverse by power: g has finite order dividing a small bound
    p = g
    prev = identity(n)
    while p != identity(n):
        prev = p
        p = matmul(p, g, n, m)
    return prev


def main():
    out = {}
    out["ideal_z6xz4_32"] = ideal_closure([6, 4], [(3, 2)])
    out["c2_star"] = {m: c2_star_z(m) for m in [3, 4, 8, 9, 25, 27]}
    out["g2_pairs"], out["g2_long_pair_types"] = pair_scan(g2_roots(), g2_long)
    out["c2_pairs"], out["c2_long_pair_types"] = pair_scan(c2_roots(), lambda r: abs(r[0]) + abs(r[1]) == 2 and 0 in r)
    out["c2_long_orbit"] = c2_long_orbit()

    # y_{e1-e2}(2, 2) in SL(3, Z/4): [x(2), x_-(2)] on the top-left block
    x = elem(3, 4, {(0, 1): 2})
    y = elem(3, 4, {(1, 0): 2})
    out["sl3_z4_y"] = matmul(matmul(matmul(x, y, 3, 4), inverse_unipotent(x, 3, 4), 3, 4), inverse_unipotent(y, 3, 4), 3, 4)

    out["sl3_z4_order"] = len(bfs(sl3_root_elements(4, 1), 3, 4))
    e2 = bfs(sl3_root_elements(4, 2), 3, 4)
    out["sl3_z4_e2"] = len(e2)
    out["sl3_z4_e2_in_kernel"] = kernel_size(e2, 3, 4, 2)
    er2 = normal_closure(sl3_root_elements(4, 2), sl3_root_elements(4, 1), 3, 4)
    out["sl3_z4_er2"] = len(er2)

    e4 = bfs(sl3_root_elements(8, 4), 3, 8)
    out["sl3_z8_e4"] = len(e4)
    er4 = normal_closure(sl3_root_elements(8, 4), sl3_root_elements(8, 1), 3, 8)
    out["sl3_z8_er4"] = len(er4)
    out["sl3_z8_er4_in_kernel"] = kernel_size(er4, 3, 8, 4)
    e2_8 = bfs(sl3_root_elements(8, 2), 3, 8)
    out["sl3_z8_e2"] = len(e2_8)
    mixed = commutator_lower_bound(e2_8, e2_8, 3, 8, 400, 7)
    out["sl3_z8_mixed_e2_e2_lower_bound"] = len(mixed)
    out["sl3_z8_mixed_in_er4"] = mixed <= er4

    e9 = bfs(sp4_root_elements(27, 9), 4, 27)
    out["sp4_z27_e9"] = len(e9)
    er9 = normal_closure(sp4_root_elements(27, 9), sp4_root_elements(27, 1), 4, 27)
    out["sp4_z27_er9"] = len(er9)
    out["sp4_z27_er9_in_kernel"] = kernel_size(er9, 4, 27, 9)

    json.dump(out, sys.stdout, indent=1, default=str)
    print()


if __name__ == "__main__":
    main()
