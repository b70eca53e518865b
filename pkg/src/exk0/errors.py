"""Exception hierarchy shared by the engine and the command line."""


class ExK0Error(Exception):
    """Base class for every error raised by exk0."""


class DimensionError(ExK0Error, ValueError):
    pass


class ConflationError(ExK0Error, ValueError):
    """Malformed conflation arithmetic (arity mismatch, bad position)."""


class UnknownIndecomposable(ExK0Error, KeyError):
    def __init__(self, label):
        super().__init__(label)
        self.label = label

    def __str__(self):
        return f"unknown indecomposable {self.label!r}"


class InvalidPresentation(ExK0Error):
    def __init__(self, diagnostics):
        self.diagnostics = list(diagnostics)
        errors = [d for d in self.diagnostics if d.severity == "error"]
        first = errors[0] if errors else None
        super().__init__(
            f"{len(errors)} error(s) in presentation" + (f": {first}" if first else "")
        )


class QuotientTooLarge(ExK0Error):
    def __init__(self, order, cap):
        super().__init__(f"quotient has order {order}, above the cap {cap}")
        self.order = order
        self.cap = cap


class HypothesisViolation(ExK0Error):
    """The input does not satisfy the hypotheses needed for classification."""


class EvenN(HypothesisViolation):
    def __init__(self, n):
        super().__init__(
            f"n = {n} is even; this operation requires n to be odd "
            "(the classification of dense complete subcategories and the "
            "[A] - [G] normal form only hold for odd n)"
        )
        self.n = n


class InfiniteQuotient(HypothesisViolation):
    def __init__(self, free_rank):
        super().__init__(
            f"quotient has free rank {free_rank}; only finite quotients can be enumerated"
        )
        self.free_rank = free_rank


class MissingWitness(HypothesisViolation):
    def __init__(self, label):
        super().__init__(f"no witness conflation declared for {label!r}")
        self.label = label
