"""Independent brute-force constructions used as test oracles.

Nothing here goes through the package's Weyl group code: reflections are
integer matrices acting on weight coordinates and elements are matrices.
"""

from __future__ import annotations

from itertools import combinations, product


def reflection_matrices(cartan):
    n = len(cartan)
    mats = []
    for i in range(n):
        # r_i(xi) = xi - xi_i * column_i
        m = [[int(r == c) for c in range(n)] for r in range(n)]
        for r in range(n):
            m[r][i] -= cartan[r][i]
        mats.append(tuple(tuple(row) for row in m))
    return mats


def matmul(a, b):
    n = len(a)
    return tuple(tuple(sum(a[i][k] * b[k][j] for k in range(n)) for j in range(n)) for i in range(n))


def matvec(a, v):
    return tuple(sum(a[i][k] * v[k] for k in range(len(v))) for i in range(len(a)))


def group_closure(cartan):
    """All Weyl group matrices with their length, by breadth-first search."""
    gens = reflection_matrices(cartan)
    n = len(cartan)
    ident = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    length = {ident: 0}
    frontier = [ident]
    while frontier:
        nxt = []
        for g in frontier:
            for s in gens:
                h = matmul(g, s)
                if h not in length:
                    length[h] = length[g] + 1
                    nxt.append(h)
        frontier = nxt
    return gens, length


def word_matrix(gens, word):
    n = len(gens[0])
    m = tuple(tuple(int(i == j) for j in range(n)) for i in range(n))
    for i in word:
        m = matmul(m, gens[i - 1])
    return m


def subword_products(gens, word):
    return {word_matrix(gens, [word[k] for k in sub]) for r in range(len(word) + 1)
            for sub in combinations(range(len(word)), r)}


# ---- type A via permutations -------------------------------------------

def perm_length(p):
    return sum(1 for i in range(len(p)) for j in range(i + 1, len(p)) if p[i] > p[j])


def qbg_type_a(n):
    """Quantum Bruhat graph of S_n: w -> w t_ab for a < b."""
    from itertools import permutations
    edges = set()
    for w in permutations(range(n)):
        lw = perm_length(w)
        for a, b in combinations(range(n), 2):
            v = list(w)
            v[a], v[b] = v[b], v[a]
            v = tuple(v)
            lv = perm_length(v)
            if lv == lw + 1:
                edges.add((w, v, False))
            elif lv == lw - 2 * (b - a) + 1:
                edges.add((w, v, True))
    return edges


def ssyt_weights(partition, n):
    """Contents of semistandard tableaux of a shape, entries in 1..n."""
    cells = [(r, c) for r, ln in enumerate(partition) for c in range(ln)]
    out = []
    for fill in product(range(1, n + 1), repeat=len(cells)):
        t = dict(zip(cells, fill))
        ok = all(
            (c == 0 or t[(r, c - 1)] <= t[(r, c)]) and (r == 0 or t[(r - 1, c)] < t[(r, c)])
            for (r, c) in cells
        )
        if ok:
            out.append(tuple(fill.count(k) for k in range(1, n + 1)))
    return out


def schur_in_fundamental(lam):
    """Character of the type A_n irreducible of highest weight ``lam`` as {weight: mult}."""
    n = len(lam) + 1
    partition = [sum(lam[j:]) for j in range(len(lam))]
    partition = [p for p in partition if p]
    out = {}
    for c in ssyt_weights(partition, n):
        wt = tuple(c[i] - c[i + 1] for i in range(n - 1))
        out[wt] = out.get(wt, 0) + 1
    return out


def qls_count_type_a(lam):
    """prod_i C(n+1, i)^{m_i}, counted as subsets rather than by formula."""
    n = len(lam)
    total = 1
    for i, m in enumerate(lam, start=1):
        total *= sum(1 for _ in combinations(range(n + 1), i)) ** m
    return total


def a1_qls(m):
    """QLS paths of shape m*varpi in type A1, with (initial, wt, deg) computed by hand.

    Directions alternate between e and s1 at any subset of the cuts a/m.
    Going from e (before the cut) to s1 (after) costs m * (1 - sigma) in the
    degree; the other change is a Bruhat edge and costs nothing.
    """
    from fractions import Fraction
    out = []
    cuts = [Fraction(a, m) for a in range(1, m)]
    for start in (0, 1):
        for r in range(len(cuts) + 1):
            for sub in combinations(cuts, r):
                pts = [Fraction(0), *sub, Fraction(1)]
                wt, deg, d = Fraction(0), Fraction(0), start
                for k in range(len(pts) - 1):
                    wt += (pts[k + 1] - pts[k]) * (m if d == 0 else -m)
                    if k + 1 < len(pts) - 1 and d == 0:
                        deg -= (1 - pts[k + 1]) * m
                    d = 1 - d
                out.append((start, (int(wt),), int(deg)))
    return out
