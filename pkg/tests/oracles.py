"""Brute-force reference computations, kept independent of exk0's algorithms."""

from functools import reduce
from itertools import combinations, permutations, product
from math import gcd, prod


def leibniz_det(rows):
    n = len(rows)
    total = 0
    for perm in permutations(range(n)):
        inversions = sum(perm[i] > perm[j] for i in range(n) for j in range(i + 1, n))
        total += (-1) ** inversions * prod(rows[i][perm[i]] for i in range(n))
    return total


def determinantal_divisors(rows):
    """``D_j`` = gcd of all j-by-j minors, for j = 1..min(m, n)."""
    m, n = len(rows), len(rows[0])
    out = []
    for j in range(1, min(m, n) + 1):
        minors = [leibniz_det([[rows[r][c] for c in cs] for r in rs])
                  for rs in combinations(range(m), j) for cs in combinations(range(n), j)]
        out.append(reduce(gcd, minors, 0))
    return out


def span_points(gens, box, coeff=8):
    """Points of ``[-box, box]^2`` reachable with coefficients in ``[-coeff, coeff]``."""
    pts = set()
    for cs in product(range(-coeff, coeff + 1), repeat=len(gens)):
        p = tuple(sum(c * g[i] for c, g in zip(cs, gens)) for i in range(2))
        if all(abs(x) <= box for x in p):
            pts.add(p)
    return pts


def subgroups_by_closure(moduli):
    """All subgroups of ``Z/m_1 x ... x Z/m_t`` by closing every subset."""
    elems = list(product(*(range(m) for m in moduli)))

    def add(a, b):
        return tuple((x + y) % m for x, y, m in zip(a, b, moduli))

    found = set()
    for mask in range(1 << len(elems)):
        S = {elems[i] for i in range(len(elems)) if mask >> i & 1} | {elems[0]}
        while True:
            T = S | {add(a, b) for a in S for b in S}
            if T == S:
                break
            S = T
        found.add(frozenset(S))
    return found


def _lower_solve_contains(L, v):
    """Is ``v`` an integer combination of the columns of lower-triangular ``L``?"""
    k = len(v)
    v = list(v)
    for j in range(k):
        d = L[j][j]
        if v[j] % d:
            return False
        q = v[j] // d
        for i in range(j, k):
            v[i] -= q * L[i][j]
    return not any(v)


def full_rank_lattices_containing(base_columns, k, index):
    """Every full-rank lattice ``L`` with ``base <= L <= Z^k``.

    ``index`` is ``[Z^k : base]``. Candidates are enumerated directly as
    lower-triangular Hermite forms: positive diagonal ``d_i`` whose product
    divides ``index``, entry ``(i, j)`` for ``j < i`` in ``[0, d_i)``.
    Returned as sorted tuples of column tuples.
    """
    out = []
    divisors = [d for d in range(1, index + 1) if index % d == 0]
    for diag in product(divisors, repeat=k):
        if index % prod(diag):
            continue
        slots = [(i, j) for i in range(k) for j in range(i)]
        for vals in product(*(range(diag[i]) for i, _ in slots)):
            L = [[0] * k for _ in range(k)]
            for i in range(k):
                L[i][i] = diag[i]
            for (i, j), x in zip(slots, vals):
                L[i][j] = x
            if all(_lower_solve_contains(L, c) for c in base_columns):
                out.append(tuple(tuple(L[i][j] for i in range(k)) for j in range(k)))
    return sorted(out)


def objects_upto(indecs, bound):
    """All multiplicity vectors with total at most ``bound``."""
    return [v for v in product(range(bound + 1), repeat=len(indecs)) if sum(v) <= bound]
