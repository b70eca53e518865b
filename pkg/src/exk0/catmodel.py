"""Objects and conflations of a finitely presented n-exangulated category.

Only the combinatorial shadow is modelled: an object is a finite multiset
of indecomposable labels (a Krull-Schmidt skeleton), a conflation is the
tuple of its n+2 objects. Morphisms and the extension functor are not
represented, and nothing here checks that the declared data come from a
genuine n-exangulated category.

The conflations of a presentation are the declared ones closed under
termwise direct sums and trivial conflations.
"""

from collections import Counter
from dataclasses import dataclass, field, replace
import re

from .errors import ConflationError, MissingWitness

IDENT = re.compile(r"[A-Za-z][A-Za-z0-9_]*\Z")

GENERATOR = "generator"
COGENERATOR = "cogenerator"


@dataclass(frozen=True)
class ObjectExpr:
    """Multiset of indecomposables; ``ObjectExpr()`` is the zero object."""
    terms: tuple = ()

    def __post_init__(self):
        counts = Counter()
        for label, mult in self.terms:
            if mult < 0:
                raise ValueError(f"negative multiplicity for {label!r}")
            counts[label] += mult
        object.__setattr__(
            self, "terms", tuple(sorted((k, v) for k, v in counts.items() if v))
        )

    @classmethod
    def of(cls, *labels):
        return cls(tuple(Counter(labels).items()))

    @classmethod
    def from_counts(cls, counts):
        return cls(tuple(dict(counts).items()))

    @property
    def counts(self):
        return dict(self.terms)

    @property
    def total(self):
        return sum(m for _, m in self.terms)

    def multiplicity(self, label):
        return self.counts.get(label, 0)

    def support(self):
        return {label for label, _ in self.terms}

    def __bool__(self):
        return bool(self.terms)

    def __add__(self, other):
        return ObjectExpr(self.terms + other.terms)

    def __mul__(self, k):
        return ObjectExpr(tuple((label, k * m) for label, m in self.terms))

    __rmul__ = __mul__

    def minus(self, other):
        """Multiset difference, or ``None`` if ``other`` is not a summand."""
        counts = self.counts
        for label, m in other.terms:
            if counts.get(label, 0) < m:
                return None
            counts[label] -= m
        return ObjectExpr.from_counts(counts)

    def format(self, order=None):
        if not self.terms:
            return "0"
        counts = self.counts
        labels = [x for x in order if x in counts] if order else sorted(counts)
        return " + ".join(x if counts[x] == 1 else f"{counts[x]}*{x}" for x in labels)

    def __str__(self):
        return self.format()


ZERO = ObjectExpr()


def direct_sum(a, b):
    return a + b


@dataclass(frozen=True)
class Conflation:
    """An (n+2)-tuple of objects ``X_0 -> X_1 -> ... -> X_{n+1}``."""
    terms: tuple

    def __post_init__(self):
        object.__setattr__(self, "terms", tuple(self.terms))
        if len(self.terms) < 3:
            raise ConflationError(f"a conflation needs at least 3 terms, got {len(self.terms)}")

    @classmethod
    def zero(cls, n):
        return cls((ZERO,) * (n + 2))

    @property
    def n(self):
        return len(self.terms) - 2

    def __getitem__(self, i):
        return self.terms[i]

    def __len__(self):
        return len(self.terms)

    def __add__(self, other):
        return sum_conflations(self, other)

    def reversed(self):
        return Conflation(self.terms[::-1])

    def support(self):
        return set().union(*(t.support() for t in self.terms))

    def format(self, order=None):
        return " | ".join(t.format(order) for t in self.terms)

    def __str__(self):
        return self.format()


def trivial_conflation(A, i, n):
    """``A`` in positions ``i`` and ``i+1``, zero elsewhere."""
    if not 0 <= i <= n:
        raise ConflationError(f"position {i} out of range 0..{n}")
    return Conflation(tuple(A if j in (i, i + 1) else ZERO for j in range(n + 2)))


def sum_conflations(x, y):
    if len(x) != len(y):
        raise ConflationError(f"cannot add conflations of lengths {len(x)} and {len(y)}")
    return Conflation(tuple(a + b for a, b in zip(x.terms, y.terms)))


def trivial_decomposition(c):
    """Objects ``A_0..A_n`` with ``c`` the sum of ``trivial_conflation(A_i, i)``.

    Returns ``None`` when ``c`` is not a sum of trivial conflations. The
    decomposition is forced: ``A_0 = X_0`` and ``A_i = X_i - A_{i-1}``.
    """
    parts = [c[0]]
    for X in c.terms[1:-1]:
        rest = X.minus(parts[-1])
        if rest is None:
            return None
        parts.append(rest)
    return parts if parts[-1] == c[-1] else None


def is_trivial(c):
    return trivial_decomposition(c) is not None


@dataclass(frozen=True)
class CategoryPresentation:
    name: str
    n: int
    indecs: tuple
    conflations: tuple = ()
    generator: frozenset = frozenset()
    generator_mode: str = GENERATOR
    witnesses: dict = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(self, "indecs", tuple(self.indecs))
        object.__setattr__(self, "conflations", tuple(self.conflations))
        object.__setattr__(self, "generator", frozenset(self.generator))
        object.__setattr__(self, "witnesses", dict(self.witnesses))

    __hash__ = None

    @property
    def n_odd(self):
        return self.n % 2 == 1

    def reversed(self):
        """The same data read backwards, with generator and cogenerator swapped.

        For odd n a reversed conflation has the same Euler vector, so this
        lets cogenerator presentations reuse the generator code path.
        """
        mode = COGENERATOR if self.generator_mode == GENERATOR else GENERATOR
        return replace(
            self,
            conflations=tuple(c.reversed() for c in self.conflations),
            generator_mode=mode,
            witnesses={k: w.reversed() for k, w in self.witnesses.items()},
        )

    def as_generator(self):
        return self if self.generator_mode == GENERATOR else self.reversed()

    def missing_witnesses(self):
        return [i for i in self.indecs if i not in self.witnesses]

    def witness_complement(self, label):
        """The object ``A'`` of the witness ``A' -> G_1 -> ... -> G_n -> label``."""
        if label not in self.witnesses:
            raise MissingWitness(label)
        w = self.witnesses[label]
        return w[0] if self.generator_mode == GENERATOR else w[-1]

    def obj(self, *labels):
        return ObjectExpr.of(*labels)


def witness_for_object(pres, B):
    """Termwise sum of the witnesses of the indecomposables in ``B``.

    In generator mode the result ends in ``B``; in cogenerator mode it
    starts with ``B``. The inner terms are supported on the generator.
    """
    total = Conflation.zero(pres.n)
    for label in pres.indecs:
        m = B.multiplicity(label)
        if not m:
            continue
        if label not in pres.witnesses:
            raise MissingWitness(label)
        w = pres.witnesses[label]
        for _ in range(m):
            total = total + w
    unknown = B.support() - set(pres.indecs)
    if unknown:
        raise MissingWitness(sorted(unknown)[0])
    return total


def in_closure(pres, c):
    """Whether ``c`` is a sum of declared and trivial conflations.

    Tries every nonnegative combination of declared conflations that fits
    inside ``c`` termwise, then asks whether the remainder decomposes into
    trivial conflations.
    """
    if len(c) != pres.n + 2:
        return False
    declared = [d for d in dict.fromkeys(pres.conflations)
                if len(d) == len(c) and not is_trivial(d)]

    def search(rest, j):
        if is_trivial(rest):
            return True
        for k in range(j, len(declared)):
            terms = [x.minus(y) for x, y in zip(rest.terms, declared[k].terms)]
            if all(t is not None for t in terms) and search(Conflation(terms), k):
                return True
        return False

    return search(c, 0)


@dataclass(frozen=True)
class Diagnostic:
    severity: str
    code: str
    message: str
    line: int = None
    column: int = None

    def __str__(self):
        where = f"{self.line}:{self.column}: " if self.line is not None else ""
        return f"{where}{self.severity}: [{self.code}] {self.message}"


def validate(pres, locations=None):
    """Check the presentation invariants; returns a list of diagnostics.

    ``locations`` optionally maps keys such as ``("conflation", 0)`` or
    ``("witness", "S")`` to ``(line, column)`` for error reporting.
    """
    locations = locations or {}
    out = []

    def report(code, message, key=None, severity="error"):
        line, col = locations.get(key, (None, None))
        out.append(Diagnostic(severity, code, message, line, col))

    if not isinstance(pres.n, int) or pres.n < 1:
        report("BadN", f"n must be a positive integer, got {pres.n!r}", "n")
        return out
    known = set()
    for label in pres.indecs:
        if not isinstance(label, str) or not IDENT.match(label):
            report("BadIdent", f"{label!r} is not a valid identifier", ("indec", label))
        if label in known:
            report("DuplicateIndec", f"{label!r} declared twice", ("indec", label))
        known.add(label)

    def check_terms(c, what, key):
        ok = True
        if len(c) != pres.n + 2:
            report("ArityError",
                   f"{what} has {len(c)} terms, expected {pres.n + 2}", key)
            ok = False
        for label in sorted(c.support() - known):
            report("UnknownIndec", f"{what} mentions undeclared {label!r}", key)
            ok = False
        return ok

    for idx, c in enumerate(pres.conflations):
        check_terms(c, f"conflation {idx + 1}", ("conflation", idx))

    if pres.generator_mode not in (GENERATOR, COGENERATOR):
        report("BadMode", f"unknown generator mode {pres.generator_mode!r}", "generator")
    for label in sorted(pres.generator - known):
        report("UnknownIndec", f"generator mentions undeclared {label!r}", "generator")

    for label, w in pres.witnesses.items():
        key = ("witness", label)
        if label not in known:
            report("UnknownIndec", f"witness for undeclared {label!r}", key)
            continue
        if not check_terms(w, f"witness for {label}", key):
            continue
        end = w[-1] if pres.generator_mode == GENERATOR else w[0]
        inner = set().union(*(t.support() for t in w.terms[1:-1]))
        if end != ObjectExpr.of(label) or not inner <= pres.generator:
            side = "last" if pres.generator_mode == GENERATOR else "first"
            report("BadWitness",
                   f"witness for {label} must have {side} term {label} and inner "
                   "terms supported on the generator", key)
        elif not in_closure(pres, w):
            report("WitnessNotConflation",
                   f"witness for {label} is not a sum of declared and trivial conflations",
                   key)

    if pres.n % 2 == 0:
        report("EvenN", f"n = {pres.n} is even: K0 is available but classification "
               "requires odd n", "n", severity="warning")
    return out
