"""Dense complete subcategories versus subgroups of K0 containing H_G.

A subcategory ``f(H)`` is infinite, so it is carried intensionally by its
subgroup: ``A`` belongs to it exactly when ``[A]`` lies in ``H``. The
object-level checks (gs witnesses, the fg roundtrip) search multisets up
to a bound and report what they could not settle instead of guessing.
"""

from dataclasses import dataclass, field
from itertools import combinations_with_replacement
import random

from .abgroup import DEFAULT_CAP, enumerate_subgroups_containing, subgroup_from_generators
from .catmodel import ObjectExpr, Conflation, trivial_conflation
from .errors import EvenN, MissingWitness
from .grothendieck import class_of, express_as_difference, h_g


@dataclass(frozen=True, eq=False)
class SubcategoryHandle:
    """``f(H)``: every object whose class lies in ``H``."""
    K: object
    H: object

    def __contains__(self, A):
        return f_member(self, A)

    def criterion(self):
        """Congruences deciding membership: list of ``(coefficients, modulus)``.

        ``A`` is in ``f(H)`` iff ``sum(c_i * mult_i(A)) % modulus == 0`` for
        each pair; modulus 0 means the sum must vanish outright.
        """
        Q = self.H.quotient()
        return [([c % m for c in row] if m else row, m)
                for row, m in zip(Q.projection.to_rows(), Q.moduli)]

    def describe(self):
        indecs = self.K.indecs
        parts = []
        for coeffs, m in self.criterion():
            lhs = " + ".join(f"{c}*{i}" if c != 1 else i
                             for c, i in zip(coeffs, indecs) if c) or "0"
            parts.append(f"{lhs} = 0" if m == 0 else f"{lhs} = 0 (mod {m})")
        return "all objects" if not parts else "; ".join(parts)


def f_handle(K, H):
    if not h_g(K) <= H:
        raise ValueError("subgroup does not contain the image of the generator")
    return SubcategoryHandle(K, H)


def f_member(S, A):
    return class_of(S.K, A).vector in S.H


@dataclass(frozen=True)
class ExtensionalSubcategory:
    seeds: tuple

    def __post_init__(self):
        object.__setattr__(self, "seeds", tuple(self.seeds))
        if not self.seeds:
            raise ValueError("an extensional subcategory needs at least one seed object")


def g_subgroup(K, S):
    if isinstance(S, ExtensionalSubcategory):
        S = S.seeds
    return subgroup_from_generators(K.group, [class_of(K, A).vector for A in S])


def _require_classifiable(K):
    if not K.pres.n_odd:
        raise EvenN(K.pres.n)
    missing = K.pres.missing_witnesses()
    if missing:
        raise MissingWitness(missing[0])


def classify_all(K, cap=DEFAULT_CAP):
    """One ``(H, f(H))`` pair per subgroup ``H`` with ``H_G <= H <= K0``."""
    _require_classifiable(K)
    return [(H, SubcategoryHandle(K, H))
            for H in enumerate_subgroups_containing(K.group, h_g(K), cap)]


def density_completion(K, label):
    """``label + A'`` from the witness of ``label``; its class lies in H_G."""
    return ObjectExpr.of(label) + K.pres.witness_complement(label)


def generating_family(K, H):
    """Finitely many objects of ``f(H)`` whose classes generate ``H``."""
    _require_classifiable(K)
    objs = [density_completion(K, i) for i in K.indecs]
    objs += [ObjectExpr.of(i) for i in K.indecs if i in K.pres.generator]
    for b in H.generators():
        A, _ = express_as_difference(K, b)
        objs.append(A)
    return objs


def roundtrip_gf(K, H):
    """Whether ``g(f(H)) == H``, computed from an explicit generating family."""
    objs = generating_family(K, H)
    S = SubcategoryHandle(K, H)
    if not all(f_member(S, A) for A in objs):
        return False
    return g_subgroup(K, objs) == H


def objects_up_to(indecs, bound):
    """Every object of total multiplicity at most ``bound``, smallest first."""
    for total in range(bound + 1):
        for combo in combinations_with_replacement(indecs, total):
            yield ObjectExpr.of(*combo)


@dataclass(frozen=True)
class GSWitness:
    """Outcome of a search for ``A + S_A == B + S_B`` with ``S_A, S_B`` in f(H).

    ``status`` is ``"found"``, ``"negative"`` (impossible: ``[A] - [B]``
    is not in H) or ``"exhausted"`` (nothing within the bound).
    """
    status: str
    A: ObjectExpr
    B: ObjectExpr
    S_A: ObjectExpr = None
    S_B: ObjectExpr = None

    @property
    def found(self):
        return self.status == "found"


def gs_witness(S, A, B, bound):
    diff = class_of(S.K, A) - class_of(S.K, B)
    if diff.vector not in S.H:
        return GSWitness("negative", A, B)
    for S_A in objects_up_to(S.K.indecs, bound):
        S_B = (A + S_A).minus(B)
        if S_B is None or S_B.total > bound:
            continue
        if f_member(S, S_A) and f_member(S, S_B):
            return GSWitness("found", A, B, S_A, S_B)
    return GSWitness("exhausted", A, B)


@dataclass
class FGReport:
    confirmed: list = field(default_factory=list)
    exhausted: list = field(default_factory=list)
    non_members: int = 0

    @property
    def ok(self):
        return not self.exhausted


def roundtrip_fg(K, S, bound):
    """Check ``f(g(S))`` against the bounded objects.

    Every member of ``f(g(S))`` of total multiplicity at most ``bound``
    should be equivalent to 0 through a gs witness; the ones where the
    search ran out are listed as inconclusive.
    """
    if not K.pres.n_odd:
        raise EvenN(K.pres.n)
    handle = SubcategoryHandle(K, g_subgroup(K, S))
    report = FGReport()
    for A in objects_up_to(K.indecs, bound):
        if not f_member(handle, A):
            report.non_members += 1
            continue
        w = gs_witness(handle, A, ObjectExpr(), bound)
        (report.confirmed if w.found else report.exhausted).append(w)
    return report


@dataclass
class CompletenessReport:
    checked: int = 0
    applicable: int = 0
    not_applicable: int = 0
    violations: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.violations


def _random_conflation(pres, rng, max_parts=4):
    c = Conflation.zero(pres.n)
    for _ in range(rng.randint(1, max_parts)):
        if pres.conflations and rng.random() < 0.6:
            c = c + rng.choice(pres.conflations)
        else:
            A = ObjectExpr.of(*rng.choices(pres.indecs, k=rng.randint(0, 2)))
            c = c + trivial_conflation(A, rng.randint(0, pres.n), pres.n)
    return c


def verify_complete(S, samples=200, seed=0):
    """If n+1 terms of a conflation lie in f(H), so must the last one.

    Runs over the declared conflations plus ``samples`` random sums of
    declared and trivial conflations.
    """
    pres = S.K.pres
    rng = random.Random(seed)
    pool = list(pres.conflations) + [_random_conflation(pres, rng) for _ in range(samples)]
    report = CompletenessReport()
    for c in pool:
        report.checked += 1
        inside = [f_member(S, X) for X in c.terms]
        if sum(inside) < len(inside) - 1:
            report.not_applicable += 1
            continue
        report.applicable += 1
        if not all(inside):
            report.violations.append(c)
    return report


@dataclass
class DensityReport:
    complements: dict = field(default_factory=dict)
    failures: list = field(default_factory=list)

    @property
    def ok(self):
        return not self.failures


def verify_dense(S):
    """Every indecomposable is a summand of a member, via its witness."""
    _require_classifiable(S.K)
    report = DensityReport()
    for label in S.K.indecs:
        comp = S.K.pres.witness_complement(label)
        report.complements[label] = comp
        if not f_member(S, ObjectExpr.of(label) + comp):
            report.failures.append(label)
    return report
