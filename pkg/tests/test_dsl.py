import os

import pytest
from hypothesis import HealthCheck, given, settings, strategies as st

from exk0 import FIXTURES, fixture_text
from exk0.catmodel import (CategoryPresentation, Conflation, ObjectExpr, trivial_conflation,
                           validate)
from exk0.dsl import format_presentation, load, parse, parse_object

from conftest import DATA

A2 = """\
category "a2"
n = 1
indecomposables: S, P
conflation: S | P | S
generator: P
witness S: S | P | S
witness P: 0 | P | P
"""


def test_a2_text():
    doc = parse(A2)
    assert doc.ok and doc.diagnostics == []
    pres = doc.presentation
    assert pres.indecs == ("S", "P") and pres.generator == {"P"}
    assert validate(pres) == []


def test_comments_and_blank_lines():
    text = "# header comment\n\n" + A2.replace("n = 1", "n = 1   # odd") + "\n# trailing\n"
    assert parse(text).presentation == parse(A2).presentation


def test_multiplicities_coalesce():
    assert parse_object("2*S + S", ["S", "P"]) == ObjectExpr.from_counts({"S": 3})
    assert parse_object("0", ["S"]) == ObjectExpr()


def test_arity_error_located():
    doc = parse(A2.replace("conflation: S | P | S", "conflation: S | P"))
    [d] = doc.errors
    assert d.code == "ArityError" and d.line == 4 and "expected 3" in d.message
    assert doc.presentation is None


@pytest.mark.parametrize("fname,code,line,col", [
    ("bad_arity.cat", "ArityError", 4, 13),
    ("bad_undeclared.cat", "UndeclaredIdent", 4, 17),
    ("bad_duplicate.cat", "DuplicateIndec", 3, 24),
])
def test_bad_fixtures(fname, code, line, col):
    doc = load(os.path.join(DATA, fname))
    assert [(d.code, d.line, d.column) for d in doc.errors] == [(code, line, col)]
    assert not doc.ok


@pytest.mark.parametrize("text,code", [
    ('n = 1\n', "Syntax"),
    ('category "x"\n', "MissingHeader"),
    ('category "x"\nn = 0\n', "BadN"),
    ('category "x"\nn = 1\nindecomposables: A\nconflation: A | 0*A | A\n', "Syntax"),
    ('category "x"\nn = 1\nindecomposables: A\nfoo: A\n', "Syntax"),
    ('category "x"\nn = 1\nindecomposables: A\ngenerator: A\ncogenerator: A\n',
     "DuplicateGenerator"),
    ('category "x"\nn = 1\nindecomposables: A\nwitness A: A | A | 0\nwitness A: 0 | A | A\n',
     "DuplicateWitness"),
    ('category "x"\nn = 1\nindecomposables: A\nwitness B: 0 | A | A\n', "UndeclaredIdent"),
    ('category "x"\nn = 1\nindecomposables: A, B\ngenerator: A\nwitness B: 0 | B | B\n',
     "BadWitness"),
    ('category "x"\nn = 1\nindecomposables: A $\n', "Syntax"),
])
def test_error_codes(text, code):
    doc = parse(text)
    assert code in [d.code for d in doc.errors]
    assert all(d.line is not None and d.column is not None for d in doc.diagnostics)


def test_errors_on_several_lines_all_reported():
    text = 'category "x"\nn = 1\nindecomposables: A\nconflation: A | B | A\nconflation: A\n'
    assert [d.line for d in parse(text).errors] == [4, 5]


def test_print_canonical():
    pres = parse(A2).presentation
    assert format_presentation(pres) == A2


def test_print_zero_and_multiplicity():
    pres = CategoryPresentation("z", 1, ("S",), (Conflation((ObjectExpr(), ObjectExpr.of("S", "S"),
                                                             ObjectExpr.of("S", "S"))),))
    text = format_presentation(pres)
    assert "conflation: 0 | 2*S | 2*S" in text
    assert "generator: 0" in text


def test_name_escaping():
    pres = CategoryPresentation('we "quote" \\ things', 1, ("A",))
    assert parse(format_presentation(pres)).presentation == pres


@pytest.mark.parametrize("name", FIXTURES)
def test_fixture_roundtrip(name):
    doc = parse(fixture_text(name))
    again = parse(format_presentation(doc.presentation))
    assert again.presentation == doc.presentation
    assert format_presentation(again.presentation) == format_presentation(doc.presentation)


idents = st.from_regex(r"[A-Za-z][A-Za-z0-9_]{0,4}", fullmatch=True)


@st.composite
def presentations(draw):
    n = draw(st.integers(1, 4))
    indecs = draw(st.lists(idents, min_size=1, max_size=4, unique=True))
    obj = st.dictionaries(st.sampled_from(indecs), st.integers(1, 3), max_size=3).map(
        ObjectExpr.from_counts)
    conflations = draw(st.lists(st.lists(obj, min_size=n + 2, max_size=n + 2).map(Conflation),
                                max_size=4))
    generator = draw(st.sets(st.sampled_from(indecs)))
    mode = draw(st.sampled_from(["generator", "cogenerator"]))
    witnesses = {}
    for i in indecs:
        if i in generator and draw(st.booleans()):
            # i -> i -> 0 ... or its dual is trivial, with inner term i in the generator
            pos = n if mode == "generator" else 0
            witnesses[i] = trivial_conflation(ObjectExpr.of(i), pos, n)
    name = draw(st.text(st.characters(blacklist_categories=("Cs", "Cc")), max_size=10))
    return CategoryPresentation(name, n, tuple(indecs), tuple(conflations), generator, mode,
                                witnesses)


@given(presentations())
@settings(max_examples=100, deadline=None, suppress_health_check=[HealthCheck.too_slow])
def test_generated_roundtrip(pres):
    assert [d for d in validate(pres) if d.severity == "error"] == []
    text = format_presentation(pres)
    doc = parse(text)
    assert doc.ok, doc.diagnostics
    assert doc.presentation == pres
    assert format_presentation(doc.presentation) == text
