import itertools
import random

import pytest
from hypothesis import given, settings, strategies as st

from exk0 import load_fixture
from exk0.abgroup import IntMatrix, cokernel, smith_normal_form, whole_group
from exk0.catmodel import CategoryPresentation, Conflation, ObjectExpr, trivial_conflation
from exk0.errors import EvenN, InvalidPresentation, MissingWitness
from exk0.grothendieck import (class_of, compute_k0, euler_vector, express_as_difference, h_g)

O = ObjectExpr.of
ZERO = ObjectExpr()


class TestEuler:
    def test_trivial_conflations_vanish(self):
        for n in (1, 2, 3):
            for i in range(n + 1):
                c = trivial_conflation(O("S", "P", "P"), i, n)
                assert euler_vector(c, ("S", "P")) == (0, 0)

    def test_three_term(self):
        c = Conflation((O("S"), O("P"), O("S")))
        assert euler_vector(c, ("S", "P")) == (2, -1)

    def test_five_term_signs(self):
        c = Conflation(tuple(O(x) for x in "ABCDE"))
        assert euler_vector(c, tuple("ABCDE")) == (1, -1, 1, -1, 1)

    @pytest.mark.parametrize("name", ["a2", "v4", "n3gen", "pentagon"])
    def test_additive_over_sums(self, name):
        pres = load_fixture(name)
        rng = random.Random(name)
        pool = list(pres.conflations) + [
            trivial_conflation(O(*rng.choices(pres.indecs, k=2)), i, pres.n)
            for i in range(pres.n + 1)]
        for _ in range(50):
            x, y = rng.choice(pool), rng.choice(pool)
            ex, ey = euler_vector(x, pres.indecs), euler_vector(y, pres.indecs)
            assert euler_vector(x + y, pres.indecs) == tuple(a + b for a, b in zip(ex, ey))


class TestK0:
    def test_single_free(self):
        K = compute_k0(CategoryPresentation("one", 1, ("A",)))
        assert (K.group.free_rank, K.group.torsion) == (1, ())

    def test_a2(self, k0):
        K = k0("a2")
        assert (K.group.free_rank, K.group.torsion) == (1, ())
        s, p = K.class_of(O("S")).coords(), K.class_of(O("P")).coords()
        # the relation (2, -1) has SNF diag(1), so K0 = Z and [P] = 2[S]
        assert abs(s[0]) == 1 and p == (2 * s[0],)

    def test_v4(self, k0):
        assert k0("v4").group.torsion == (2, 2) and k0("v4").group.free_rank == 0

    def test_free3_and_pentagon(self, k0):
        assert (k0("free3").group.free_rank, k0("free3").group.torsion) == (3, ())
        assert (k0("pentagon").group.free_rank, k0("pentagon").group.torsion) == (4, ())

    def test_n3gen(self, k0):
        # rows (2,0,-1), (0,2,-1): 2x2 minors 4, -2, 2 have gcd 2
        assert (k0("n3gen").group.free_rank, k0("n3gen").group.torsion) == (1, (2,))

    def test_even_n_has_no_extra_relation(self, k0):
        K = k0("even")
        assert (K.group.free_rank, K.group.torsion) == (1, ())
        assert K.class_of(ZERO) == 0

    def test_invalid_rejected(self):
        pres = CategoryPresentation("bad", 1, ("A",), (Conflation((O("A"), ZERO, ZERO, ZERO)),))
        with pytest.raises(InvalidPresentation):
            compute_k0(pres)

    @pytest.mark.parametrize("name", ["a2", "a2co", "v4", "n3gen", "pentagon", "even"])
    def test_declared_euler_vectors_are_zero(self, name, k0):
        K = k0(name)
        for c in K.pres.conflations:
            assert K.group.is_zero(euler_vector(c, K.indecs))


class TestClasses:
    def test_zero(self, k0):
        assert class_of(k0("a2"), ZERO) == 0

    def test_a2_sum(self, k0):
        K = k0("a2")
        assert class_of(K, O("S", "P")) == 3 * class_of(K, O("S"))

    def test_v4_double(self, k0):
        assert class_of(k0("v4"), O("X", "X")) == 0
        assert class_of(k0("v4"), O("X")) != 0

    @pytest.mark.parametrize("name", ["a2", "v4", "n3gen", "pentagon"])
    @given(data=st.data())
    @settings(max_examples=50, deadline=None)
    def test_linearity(self, name, k0, data):
        K = k0(name)
        obj = st.dictionaries(st.sampled_from(K.indecs), st.integers(1, 4)).map(
            ObjectExpr.from_counts)
        A, B = data.draw(obj), data.draw(obj)
        assert class_of(K, A + B) == class_of(K, A) + class_of(K, B)


class TestHG:
    def test_empty_generator(self, k0):
        assert h_g(k0("v4")).index == 4

    def test_a2(self, k0):
        assert h_g(k0("a2")).index == 2

    def test_everything(self, k0):
        assert h_g(k0("free3")) == whole_group(k0("free3").group)


class TestDifference:
    def test_already_a_class(self, k0):
        K = k0("a2")
        assert express_as_difference(K, (0, 1)) == (O("P"), ZERO)

    def test_minus_s(self, k0):
        # one substitution with the witness (S, P, S): [S] - [P] = 1 - 2
        assert express_as_difference(k0("a2"), (-1, 0)) == (O("S"), O("P"))

    def test_zero(self, k0):
        A, G = express_as_difference(k0("a2"), (0, 0))
        assert A == G == ZERO

    def test_even_refused(self, k0):
        with pytest.raises(EvenN):
            express_as_difference(k0("even"), (-1, 0))

    def test_missing_witness(self, k0):
        with pytest.raises(MissingWitness):
            express_as_difference(k0("pentagon"), (0, -1, 0, 0, 0))

    @pytest.mark.parametrize("name", ["a2", "a2co", "v4", "n3gen", "free3"])
    def test_class_correct(self, name, k0):
        K = k0(name)
        rng = random.Random(name)
        for _ in range(100):
            v = tuple(rng.randint(-5, 5) for _ in K.indecs)
            A, G = express_as_difference(K, v)
            assert G.support() <= K.pres.generator
            assert class_of(K, A) - class_of(K, G) == K.element(v)


def _annihilating_rows(R, k, m):
    """All ``t`` in ``(Z/m)^k`` with ``t . r = 0 mod m`` for each relation row ``r``."""
    return [t for t in itertools.product(range(m), repeat=k)
            if all(sum(a * b for a, b in zip(t, r)) % m == 0 for r in R)]


def _integer_kernel(R, k):
    """A basis of ``{t in Z^k : t . r = 0 for all rows r}`` from the SNF of ``R``."""
    if not R:
        return [tuple(int(i == j) for i in range(k)) for j in range(k)]
    s = smith_normal_form(IntMatrix.from_rows(R, k))
    rank = sum(1 for d in s.diagonal if d)
    return [s.V.column(j) for j in range(rank, k)]


@pytest.mark.parametrize("name", ["a2", "v4", "n3gen", "free3", "even"])
@pytest.mark.parametrize("m", [2, 3, 4])
def test_universal_property(name, m, k0):
    K = k0(name)
    k = len(K.indecs)
    R = K.relation_vectors()
    rng = random.Random(f"{name}{m}")
    torsion_part = _annihilating_rows(R, k, m)
    free_basis = _integer_kernel(R, k)
    for _ in range(5):
        t_mod = rng.choice(torsion_part)
        coeffs = [rng.randint(-3, 3) for _ in free_basis]
        t_int = [sum(c * b[i] for c, b in zip(coeffs, free_basis)) for i in range(k)]

        def t(v):
            return (sum(a * b for a, b in zip(t_mod, v)) % m, sum(a * b for a, b in zip(t_int, v)))

        G = K.group
        slots = len(G.moduli)
        # the factoring map is forced on each invariant-factor generator
        images = [t(G.lift([int(i == j) for i in range(slots)])) for j in range(slots)]

        def t_factored(coords):
            return (sum(c * img[0] for c, img in zip(coords, images)) % m,
                    sum(c * img[1] for c, img in zip(coords, images)))

        for j, d in enumerate(G.moduli):
            if d:
                assert (d * images[j][0] % m, d * images[j][1]) == (0, 0)
        for e in range(k):
            v = [int(i == e) for i in range(k)]
            assert t(v) == t_factored(G.coords(v))
        for _ in range(20):
            v = [rng.randint(-5, 5) for _ in range(k)]
            assert t(v) == t_factored(G.coords(v))
