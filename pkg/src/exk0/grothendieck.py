"""The Grothendieck group K0 of a presented n-exangulated category.

Under the Krull-Schmidt skeleton the free group on isomorphism classes is
replaced by the free group on indecomposables: the split conflation
``A -> A+B -> B -> 0 ...`` already forces ``<A+B> = <A> + <B>``. Likewise
``<0>`` is the zero vector, so even n needs no extra relation.
"""

from dataclasses import dataclass

from .abgroup import IntMatrix, cokernel, subgroup_from_generators
from .catmodel import ObjectExpr, witness_for_object, validate
from .errors import DimensionError, EvenN, InvalidPresentation, UnknownIndecomposable


def multiplicity_vector(A, indecs):
    unknown = A.support() - set(indecs)
    if unknown:
        raise UnknownIndecomposable(sorted(unknown)[0])
    return tuple(A.multiplicity(i) for i in indecs)


def euler_vector(c, indecs):
    """Alternating sum ``X_0 - X_1 + X_2 - ...`` as a vector over ``indecs``."""
    out = [0] * len(indecs)
    for pos, X in enumerate(c.terms):
        sign = -1 if pos % 2 else 1
        for j, m in enumerate(multiplicity_vector(X, indecs)):
            out[j] += sign * m
    return tuple(out)


@dataclass(frozen=True, eq=False)
class K0Element:
    """An element of K0, represented by any vector in its coset."""
    group: object
    vector: tuple

    def coords(self):
        return self.group.coords(self.vector)

    def _other(self, other):
        if isinstance(other, K0Element):
            return other.vector
        return tuple(other)

    def __add__(self, other):
        return K0Element(self.group, tuple(a + b for a, b in zip(self.vector, self._other(other))))

    def __sub__(self, other):
        return K0Element(self.group, tuple(a - b for a, b in zip(self.vector, self._other(other))))

    def __neg__(self):
        return K0Element(self.group, tuple(-a for a in self.vector))

    def __rmul__(self, k):
        return K0Element(self.group, tuple(k * a for a in self.vector))

    def __eq__(self, other):
        if isinstance(other, int) and other == 0:
            return self.group.is_zero(self.vector)
        try:
            diff = self - other
        except TypeError:
            return NotImplemented
        return self.group.is_zero(diff.vector)

    def __hash__(self):
        return hash(self.coords())

    def __iter__(self):
        return iter(self.vector)

    def __len__(self):
        return len(self.vector)

    def __repr__(self):
        return f"K0Element{self.coords()}"


@dataclass(frozen=True, eq=False)
class GrothendieckGroup:
    pres: object
    group: object

    @property
    def indecs(self):
        return self.pres.indecs

    def element(self, vec):
        vec = tuple(vec)
        if len(vec) != len(self.indecs):
            raise DimensionError(f"element of length {len(vec)}, expected {len(self.indecs)}")
        return K0Element(self.group, vec)

    def class_of(self, A):
        return class_of(self, A)

    def relation_vectors(self):
        return [euler_vector(c, self.indecs) for c in self.pres.conflations]

    def __str__(self):
        return str(self.group)


def compute_k0(pres):
    problems = [d for d in validate(pres) if d.severity == "error"]
    if problems:
        raise InvalidPresentation(problems)
    k = len(pres.indecs)
    rels = [euler_vector(c, pres.indecs) for c in pres.conflations]
    return GrothendieckGroup(pres, cokernel(IntMatrix.from_rows(rels, k)))


def class_of(K, A):
    return K0Element(K.group, multiplicity_vector(A, K.indecs))


def h_g(K):
    """Subgroup generated by the classes of the generator's indecomposables."""
    gens = [class_of(K, ObjectExpr.of(i)).vector for i in K.indecs if i in K.pres.generator]
    return subgroup_from_generators(K.group, gens)


def express_as_difference(K, v):
    """Objects ``(A, G)`` with ``[A] - [G] = v`` and ``G`` in the generator.

    Split ``v`` into ``[X] - [B]``, substitute the alternating sum of the
    witness ``B' -> G_1 -> ... -> G_n -> B`` for ``[B]``, and collect
    signs. Needs odd n so that ``[B']`` picks up a plus sign.
    """
    pres = K.pres
    if not pres.n_odd:
        raise EvenN(pres.n)
    vec = tuple(v)
    if len(vec) != len(K.indecs):
        raise DimensionError(f"element of length {len(vec)}, expected {len(K.indecs)}")
    X = ObjectExpr.from_counts({i: c for i, c in zip(K.indecs, vec) if c > 0})
    B = ObjectExpr.from_counts({i: -c for i, c in zip(K.indecs, vec) if c < 0})

    w = witness_for_object(pres.as_generator(), B)
    A, G = X + w[0], ObjectExpr()
    for j in range(1, pres.n + 1):
        if j % 2:
            G = G + w[j]
        else:
            A = A + w[j]
    return A, G
