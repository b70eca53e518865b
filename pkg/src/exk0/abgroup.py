"""Exact integer linear algebra for finitely generated abelian groups.

Everything here works on Python ints, so there is no overflow. Vectors
are plain tuples of ints; matrices are :class:`IntMatrix` values.

Subgroups of a quotient ``Z^k / R`` are stored as their preimage lattice
``R <= L <= Z^k`` in column Hermite normal form, which makes structural
equality the same thing as equality of subgroups.
"""

from dataclasses import dataclass
from fractions import Fraction
from math import prod
import itertools
import operator

from .errors import DimensionError, InfiniteQuotient, QuotientTooLarge

DEFAULT_CAP = 10**4


@dataclass(frozen=True)
class IntMatrix:
    rows: int
    cols: int
    entries: tuple

    def __post_init__(self):
        entries = tuple(operator.index(x) for x in self.entries)
        if self.rows < 0 or self.cols < 0 or len(entries) != self.rows * self.cols:
            raise DimensionError(
                f"{len(entries)} entries do not fill a {self.rows}x{self.cols} matrix"
            )
        object.__setattr__(self, "entries", entries)

    @classmethod
    def from_rows(cls, rows, cols=None):
        rows = [list(r) for r in rows]
        if cols is None:
            if not rows:
                raise DimensionError("cannot infer the column count of an empty row list")
            cols = len(rows[0])
        if any(len(r) != cols for r in rows):
            raise DimensionError("ragged rows")
        return cls(len(rows), cols, tuple(x for r in rows for x in r))

    @classmethod
    def from_columns(cls, columns, rows=None):
        columns = [list(c) for c in columns]
        if rows is None:
            if not columns:
                raise DimensionError("cannot infer the row count of an empty column list")
            rows = len(columns[0])
        if any(len(c) != rows for c in columns):
            raise DimensionError("ragged columns")
        return cls(rows, len(columns), tuple(c[i] for i in range(rows) for c in columns))

    @classmethod
    def identity(cls, n):
        return cls(n, n, tuple(int(i == j) for i in range(n) for j in range(n)))

    @classmethod
    def zeros(cls, rows, cols):
        return cls(rows, cols, (0,) * (rows * cols))

    def __getitem__(self, ij):
        i, j = ij
        return self.entries[i * self.cols + j]

    def row(self, i):
        return self.entries[i * self.cols:(i + 1) * self.cols]

    def column(self, j):
        return self.entries[j::self.cols] if self.cols else ()

    def to_rows(self):
        return [list(self.row(i)) for i in range(self.rows)]

    def columns(self):
        return [self.column(j) for j in range(self.cols)]

    def transpose(self):
        return IntMatrix(self.cols, self.rows,
                         tuple(self[i, j] for j in range(self.cols) for i in range(self.rows)))

    T = property(transpose)

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.cols != other.rows:
                raise DimensionError(
                    f"cannot multiply {self.rows}x{self.cols} by {other.rows}x{other.cols}"
                )
            ocols = other.columns()
            return IntMatrix(self.rows, other.cols, tuple(
                sum(a * b for a, b in zip(self.row(i), c))
                for i in range(self.rows) for c in ocols
            ))
        vec = tuple(other)
        if len(vec) != self.cols:
            raise DimensionError(f"vector of length {len(vec)} for {self.cols} columns")
        return tuple(sum(a * b for a, b in zip(self.row(i), vec)) for i in range(self.rows))

    def det(self):
        """Determinant via Bareiss fraction-free elimination."""
        if self.rows != self.cols:
            raise DimensionError("determinant of a non-square matrix")
        n = self.rows
        a = self.to_rows()
        sign, prev = 1, 1
        for k in range(n - 1):
            if a[k][k] == 0:
                swap = next((i for i in range(k + 1, n) if a[i][k]), None)
                if swap is None:
                    return 0
                a[k], a[swap] = a[swap], a[k]
                sign = -sign
            for i in range(k + 1, n):
                for j in range(k + 1, n):
                    a[i][j] = (a[i][j] * a[k][k] - a[i][k] * a[k][j]) // prev
            prev = a[k][k]
        return sign * a[n - 1][n - 1] if n else 1

    def __str__(self):
        return "\n".join(" ".join(f"{x:>4}" for x in r) for r in self.to_rows())


@dataclass(frozen=True)
class SmithDecomposition:
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix

    @property
    def diagonal(self):
        return tuple(self.D[i, i] for i in range(min(self.D.rows, self.D.cols)))


def xgcd(a, b):
    """Return ``(g, x, y)`` with ``g = gcd(a, b) >= 0`` and ``a*x + b*y = g``."""
    x0, y0, x1, y1 = 1, 0, 0, 1
    while b:
        q, r = divmod(a, b)
        a, b = b, r
        x0, x1 = x1, x0 - q * x1
        y0, y1 = y1, y0 - q * y1
    if a < 0:
        return -a, -x0, -y0
    return a, x0, y0


def _row_sub(a, i, t, q):
    ri, rt = a[i], a[t]
    for c in range(len(ri)):
        ri[c] -= q * rt[c]


def _col_sub(a, j, t, q):
    for r in a:
        r[j] -= q * r[t]


def _col_swap(a, i, j):
    for r in a:
        r[i], r[j] = r[j], r[i]


def smith_normal_form(M):
    """Unimodular ``U``, ``V`` and diagonal ``D`` with ``U @ M @ V == D``.

    Repeated gcd-driven row/column reduction, always pivoting on the
    entry of least absolute value. The diagonal is nonnegative and each
    entry divides the next.
    """
    m, n = M.rows, M.cols
    a = M.to_rows()
    u = IntMatrix.identity(m).to_rows()
    v = IntMatrix.identity(n).to_rows()

    for t in range(min(m, n)):
        candidates = [(abs(a[i][j]), i, j)
                      for i in range(t, m) for j in range(t, n) if a[i][j]]
        if not candidates:
            break
        _, i, j = min(candidates)
        a[t], a[i] = a[i], a[t]
        u[t], u[i] = u[i], u[t]
        _col_swap(a, t, j)
        _col_swap(v, t, j)

        while True:
            p = a[t][t]
            for i in range(t + 1, m):
                if a[i][t]:
                    q = a[i][t] // p
                    _row_sub(a, i, t, q)
                    _row_sub(u, i, t, q)
            for j in range(t + 1, n):
                if a[t][j]:
                    q = a[t][j] // p
                    _col_sub(a, j, t, q)
                    _col_sub(v, j, t, q)
            rest = [(abs(a[i][t]), i, t) for i in range(t + 1, m) if a[i][t]]
            rest += [(abs(a[t][j]), t, j) for j in range(t + 1, n) if a[t][j]]
            if rest:
                _, i, j = min(rest)
                if j == t:
                    a[t], a[i] = a[i], a[t]
                    u[t], u[i] = u[i], u[t]
                else:
                    _col_swap(a, t, j)
                    _col_swap(v, t, j)
                continue
            # pivot must divide the whole remaining block
            bad = next((i for i in range(t + 1, m)
                        if any(a[i][j] % p for j in range(t + 1, n))), None)
            if bad is None:
                break
            _row_sub(a, t, bad, -1)
            _row_sub(u, t, bad, -1)

        if a[t][t] < 0:
            a[t] = [-x for x in a[t]]
            u[t] = [-x for x in u[t]]

    return SmithDecomposition(
        IntMatrix.from_rows(u, m),
        IntMatrix.from_rows(a, n),
        IntMatrix.from_rows(v, n),
    )


def _row_hnf(rows, ncols):
    """Row-style Hermite normal form; returns the nonzero rows only."""
    rows = [list(r) for r in rows if any(r)]
    r = 0
    for c in range(ncols):
        nz = [i for i in range(r, len(rows)) if rows[i][c]]
        if not nz:
            continue
        rows[r], rows[nz[0]] = rows[nz[0]], rows[r]
        for i in range(r + 1, len(rows)):
            b = rows[i][c]
            if not b:
                continue
            a = rows[r][c]
            g, x, y = xgcd(a, b)
            top = [x * s + y * t for s, t in zip(rows[r], rows[i])]
            bottom = [(a // g) * t - (b // g) * s for s, t in zip(rows[r], rows[i])]
            rows[r], rows[i] = top, bottom
        if rows[r][c] < 0:
            rows[r] = [-s for s in rows[r]]
        p = rows[r][c]
        for i in range(r):
            q = rows[i][c] // p
            if q:
                rows[i] = [s - q * t for s, t in zip(rows[i], rows[r])]
        r += 1
        if r == len(rows):
            break
    return rows[:r]


def hnf_columns(M):
    """Column Hermite normal form of ``M``, zero columns dropped.

    Each basis column has a positive pivot (its first nonzero entry), the
    pivot rows increase from left to right, and the entries to the left
    of a pivot lie in ``[0, pivot)``.
    """
    rows = _row_hnf(M.columns(), M.rows)
    return IntMatrix.from_columns(rows, M.rows)


def pivots(basis):
    """(row, value) of the pivot of each column of an HNF basis."""
    out = []
    for col in basis.columns():
        i = next(i for i, x in enumerate(col) if x)
        out.append((i, col[i]))
    return out


def hnf_contains(basis, vec):
    """Exact membership of ``vec`` in the column span of an HNF basis."""
    vec = list(vec)
    if len(vec) != basis.rows:
        raise DimensionError(f"vector of length {len(vec)} in ambient dimension {basis.rows}")
    start = 0
    for col, (p, d) in zip(basis.columns(), pivots(basis)):
        if any(vec[start:p]):
            return False
        q, r = divmod(vec[p], d)
        if r:
            return False
        if q:
            vec = [x - q * y for x, y in zip(vec, col)]
        start = p + 1
    return not any(vec[start:])


def unimodular_inverse(M):
    """Exact inverse of a unimodular matrix (Gauss-Jordan over the rationals)."""
    n = M.rows
    a = [[Fraction(x) for x in r] + [Fraction(int(i == j)) for j in range(n)]
         for i, r in enumerate(M.to_rows())]
    for c in range(n):
        p = next(i for i in range(c, n) if a[i][c])
        a[c], a[p] = a[p], a[c]
        piv = a[c][c]
        a[c] = [x / piv for x in a[c]]
        for i in range(n):
            if i != c and a[i][c]:
                f = a[i][c]
                a[i] = [x - f * y for x, y in zip(a[i], a[c])]
    out = [r[n:] for r in a]
    if any(x.denominator != 1 for r in out for x in r):
        raise ValueError("matrix is not unimodular")
    return IntMatrix.from_rows([[int(x) for x in r] for r in out], n)


@dataclass(frozen=True)
class FinGenAbGroup:
    """``Z^k`` modulo a relation lattice, in invariant-factor form.

    ``projection`` maps an ambient vector to coordinates in
    ``Z^free_rank + Z/d_1 + ... + Z/d_t`` (free slots first); ``section``
    maps such coordinates back to an ambient representative.
    ``relations`` is the relation lattice in column HNF.
    """
    free_rank: int
    torsion: tuple
    ambient_dim: int
    projection: IntMatrix
    section: IntMatrix
    relations: IntMatrix

    @property
    def order(self):
        """Group order, or ``None`` when the group is infinite."""
        return None if self.free_rank else prod(self.torsion)

    @property
    def moduli(self):
        """Modulus per coordinate slot, 0 for free slots."""
        return (0,) * self.free_rank + self.torsion

    def coords(self, vec):
        vec = tuple(vec)
        if len(vec) != self.ambient_dim:
            raise DimensionError(
                f"vector of length {len(vec)} in ambient dimension {self.ambient_dim}"
            )
        return tuple(x % m if m else x for x, m in zip(self.projection @ vec, self.moduli))

    def is_zero(self, vec):
        return not any(self.coords(vec))

    def lift(self, coords):
        return self.section @ coords

    def __str__(self):
        parts = []
        if self.free_rank:
            parts.append("Z" if self.free_rank == 1 else f"Z^{self.free_rank}")
        parts += [f"Z/{d}" for d in self.torsion]
        return " + ".join(parts) or "0"


def cokernel(relations):
    """``Z^k`` modulo the row span of ``relations`` (one relation per row)."""
    k = relations.cols
    snf = smith_normal_form(relations)
    diag = snf.diagonal + (0,) * (k - len(snf.diagonal))
    free = [j for j in range(k) if diag[j] == 0]
    tors = [j for j in range(k) if diag[j] > 1]
    slots = free + tors
    vinv = unimodular_inverse(snf.V)
    projection = IntMatrix.from_rows([snf.V.column(j) for j in slots], k)
    section = IntMatrix.from_columns([vinv.row(j) for j in slots], k)
    return FinGenAbGroup(
        free_rank=len(free),
        torsion=tuple(diag[j] for j in tors),
        ambient_dim=k,
        projection=projection,
        section=section,
        relations=hnf_columns(relations.T),
    )


@dataclass(frozen=True)
class Subgroup:
    """Subgroup of ``ambient`` given by its preimage lattice in ``Z^k``."""
    ambient: FinGenAbGroup
    lattice_basis: IntMatrix

    def __contains__(self, vec):
        return hnf_contains(self.lattice_basis, vec)

    def __le__(self, other):
        return all(c in other for c in self.lattice_basis.columns())

    def __lt__(self, other):
        return self <= other and self != other

    @property
    def full_rank(self):
        return self.lattice_basis.cols == self.ambient.ambient_dim

    @property
    def index(self):
        """``[G : H]``, or ``None`` when it is infinite."""
        if not self.full_rank:
            return None
        return prod(d for _, d in pivots(self.lattice_basis))

    @property
    def order(self):
        """``|H|``, or ``None`` when ``H`` is infinite."""
        g = self.ambient.order
        if g is None:
            return None
        return g // self.index

    def generators(self):
        return self.lattice_basis.columns()

    def quotient(self):
        """``G / H`` as a group in its own right."""
        return cokernel(self.lattice_basis.T)


def subgroup_from_generators(G, gens):
    gens = [tuple(v) for v in gens]
    for v in gens:
        if len(v) != G.ambient_dim:
            raise DimensionError(
                f"generator of length {len(v)} in ambient dimension {G.ambient_dim}"
            )
    cols = gens + G.relations.columns()
    return Subgroup(G, hnf_columns(IntMatrix.from_columns(cols, G.ambient_dim)))


def subgroup_contains(H, vec):
    return vec in H


def trivial_subgroup(G):
    return Subgroup(G, G.relations)


def whole_group(G):
    return Subgroup(G, IntMatrix.identity(G.ambient_dim))


def _cyclic(g, moduli):
    seen, x = [], tuple(0 for _ in moduli)
    while True:
        seen.append(x)
        x = tuple((a + b) % m for a, b, m in zip(x, g, moduli))
        if x == seen[0]:
            return frozenset(seen)


def enumerate_subgroups_containing(G, H0, cap=DEFAULT_CAP):
    """Every subgroup ``H0 <= H <= G``, each canonical, sorted.

    Works in the finite quotient ``G / H0``: starting from the zero
    subgroup, adjoin one cyclic subgroup at a time and keep every new
    closure. Raises :class:`InfiniteQuotient` or :class:`QuotientTooLarge`.
    """
    Q = H0.quotient()
    if Q.free_rank:
        raise InfiniteQuotient(Q.free_rank)
    if Q.order > cap:
        raise QuotientTooLarge(Q.order, cap)
    moduli = Q.torsion
    elements = list(itertools.product(*(range(d) for d in moduli)))
    zero = elements[0]

    cyclics = {}
    for g in elements[1:]:
        cyclics.setdefault(_cyclic(g, moduli), g)

    found = {frozenset([zero]): []}
    frontier = [frozenset([zero])]
    while frontier:
        nxt = []
        for S in frontier:
            for C, g in cyclics.items():
                if C <= S:
                    continue
                T = frozenset(tuple((a + b) % m for a, b, m in zip(s, c, moduli))
                              for s in S for c in C)
                if T not in found:
                    found[T] = found[S] + [g]
                    nxt.append(T)
        frontier = nxt

    base = H0.generators()
    out = []
    for S, gens in found.items():
        H = subgroup_from_generators(G, base + [Q.lift(g) for g in gens])
        out.append((len(S), H.lattice_basis.entries, H))
    out.sort(key=lambda t: t[:2])
    return [H for _, _, H in out]
