"""Line-oriented text format for category presentations.

::

    # the A2 example
    category "a2"
    n = 1
    indecomposables: S, P
    conflation: S | P | S
    generator: P
    witness S: S | P | S
    witness P: 0 | P | P

Objects are ``0`` or sums of ``[k*]IDENT`` terms. Every conflation and
witness must have exactly n+2 terms, and identifiers must be declared
before use. Errors are collected per line with 1-based line/column.
"""

from dataclasses import dataclass, field
import re

from .catmodel import (COGENERATOR, GENERATOR, CategoryPresentation, Conflation,
                       Diagnostic, ObjectExpr, validate)

_TOKEN = re.compile(r"""
    (?P<ws>[ \t\r]+)
  | (?P<comment>\#.*)
  | (?P<string>"(?:[^"\\]|\\.)*")
  | (?P<int>[0-9]+)
  | (?P<ident>[A-Za-z][A-Za-z0-9_]*)
  | (?P<punct>[:|+*,=])
""", re.VERBOSE)


class DSLError(ValueError):
    def __init__(self, code, message, col):
        super().__init__(message)
        self.code = code
        self.col = col


@dataclass
class _Tok:
    kind: str
    text: str
    col: int


def _tokenize(line):
    toks, pos = [], 0
    while pos < len(line):
        m = _TOKEN.match(line, pos)
        if not m:
            raise DSLError("Syntax", f"unexpected character {line[pos]!r}", pos + 1)
        if m.lastgroup not in ("ws", "comment"):
            toks.append(_Tok(m.lastgroup, m.group(), pos + 1))
        pos = m.end()
    return toks


class _Cursor:
    def __init__(self, toks, eol_col):
        self.toks, self.i, self.eol = toks, 0, eol_col

    def peek(self):
        return self.toks[self.i] if self.i < len(self.toks) else None

    def col(self):
        t = self.peek()
        return t.col if t else self.eol

    def take(self, kind=None, text=None, what=None):
        t = self.peek()
        if t is None or (kind and t.kind != kind) or (text and t.text != text):
            found = repr(t.text) if t else "end of line"
            raise DSLError("Syntax", f"expected {what or text or kind}, found {found}", self.col())
        self.i += 1
        return t

    def accept(self, text):
        t = self.peek()
        if t is not None and t.text == text and t.kind == "punct":
            self.i += 1
            return True
        return False

    def done(self):
        if self.peek() is not None:
            raise DSLError("Syntax", f"unexpected {self.peek().text!r}", self.col())


@dataclass
class SourceDocument:
    text: str
    presentation: CategoryPresentation = None
    locations: dict = field(default_factory=dict)
    diagnostics: list = field(default_factory=list)

    @property
    def errors(self):
        return [d for d in self.diagnostics if d.severity == "error"]

    @property
    def ok(self):
        return self.presentation is not None and not self.errors


def _objexpr(cur, known):
    t = cur.peek()
    if t is not None and t.kind == "int" and t.text == "0":
        cur.take()
        return ObjectExpr()
    counts = {}
    while True:
        mult = 1
        t = cur.peek()
        if t is not None and t.kind == "int":
            if int(t.text) < 1:
                raise DSLError("Syntax", "multiplicity must be positive", t.col)
            cur.take()
            mult = int(t.text)
            cur.take("punct", "*")
        ident = cur.take("ident", what="an indecomposable")
        if ident.text not in known:
            raise DSLError("UndeclaredIdent",
                           f"{ident.text!r} is not a declared indecomposable", ident.col)
        counts[ident.text] = counts.get(ident.text, 0) + mult
        if not cur.accept("+"):
            return ObjectExpr.from_counts(counts)


def _terms(cur, known, n, start_col):
    terms = [_objexpr(cur, known)]
    while cur.accept("|"):
        terms.append(_objexpr(cur, known))
    cur.done()
    if len(terms) != n + 2:
        raise DSLError("ArityError",
                       f"expected {n + 2} terms for n = {n}, got {len(terms)}", start_col)
    return Conflation(terms)


def _unquote(s):
    return re.sub(r"\\(.)", r"\1", s[1:-1])


def parse(text):
    """Parse presentation text into a :class:`SourceDocument`.

    Parse errors and validation failures end up in ``diagnostics``; the
    presentation is only set when there are none of severity error.
    """
    doc = SourceDocument(text)
    diags = doc.diagnostics
    loc = doc.locations
    name = n = None
    indecs, conflations, witnesses = [], [], {}
    generator, mode, seen_generator = set(), GENERATOR, False

    for lineno, raw in enumerate(text.splitlines(), 1):
        try:
            toks = _tokenize(raw)
            if not toks:
                continue
            cur = _Cursor(toks, len(raw.rstrip()) + 1)
            head = toks[0]
            if name is None:
                cur.take("ident", "category", what="'category'")
                name = _unquote(cur.take("string", what="a quoted category name").text)
                cur.done()
                loc["category"] = (lineno, head.col)
                continue
            if n is None:
                cur.take("ident", "n", what="'n = <positive integer>'")
                cur.take("punct", "=")
                value = cur.take("int", what="a positive integer")
                cur.done()
                if int(value.text) < 1:
                    raise DSLError("BadN", "n must be a positive integer", value.col)
                n = int(value.text)
                loc["n"] = (lineno, value.col)
                continue

            keyword = cur.take("ident", what="a statement keyword").text
            if keyword == "indecomposables":
                cur.take("punct", ":")
                while True:
                    ident = cur.take("ident", what="an indecomposable name")
                    if ident.text in indecs:
                        diags.append(Diagnostic("error", "DuplicateIndec",
                                                f"{ident.text!r} declared twice",
                                                lineno, ident.col))
                    else:
                        indecs.append(ident.text)
                        loc[("indec", ident.text)] = (lineno, ident.col)
                    if not cur.accept(","):
                        break
                cur.done()
            elif keyword == "conflation":
                cur.take("punct", ":")
                c = _terms(cur, set(indecs), n, cur.col())
                loc[("conflation", len(conflations))] = (lineno, head.col)
                conflations.append(c)
            elif keyword in (GENERATOR, COGENERATOR):
                if seen_generator:
                    raise DSLError("DuplicateGenerator",
                                   "only one generator/cogenerator statement is allowed",
                                   head.col)
                cur.take("punct", ":")
                members = set()
                t = cur.peek()
                if t is not None and t.kind == "int" and t.text == "0":
                    cur.take()
                else:
                    while True:
                        ident = cur.take("ident", what="an indecomposable or 0")
                        if ident.text not in indecs:
                            raise DSLError("UndeclaredIdent",
                                           f"{ident.text!r} is not a declared indecomposable",
                                           ident.col)
                        members.add(ident.text)
                        if not cur.accept(","):
                            break
                cur.done()
                generator, mode, seen_generator = members, keyword, True
                loc["generator"] = (lineno, head.col)
            elif keyword == "witness":
                target = cur.take("ident", what="the witnessed indecomposable")
                if target.text not in indecs:
                    raise DSLError("UndeclaredIdent",
                                   f"{target.text!r} is not a declared indecomposable",
                                   target.col)
                if target.text in witnesses:
                    raise DSLError("DuplicateWitness",
                                   f"second witness for {target.text!r}", target.col)
                cur.take("punct", ":")
                witnesses[target.text] = _terms(cur, set(indecs), n, cur.col())
                loc[("witness", target.text)] = (lineno, head.col)
            else:
                raise DSLError("Syntax", f"unknown statement {keyword!r}", head.col)
        except DSLError as e:
            diags.append(Diagnostic("error", e.code, str(e), lineno, e.col))

    if name is None or n is None:
        what = "'category \"name\"'" if name is None else "'n = <positive integer>'"
        diags.append(Diagnostic("error", "MissingHeader", f"missing {what} header",
                                len(text.splitlines()) + 1, 1))
        return doc
    if doc.errors:
        return doc

    pres = CategoryPresentation(name, n, tuple(indecs), tuple(conflations),
                                frozenset(generator), mode, witnesses)
    diags.extend(validate(pres, loc))
    if not doc.errors:
        doc.presentation = pres
    return doc


def parse_object(text, indecs):
    """Parse a single object expression such as ``2*S + P``."""
    toks = _tokenize(text)
    cur = _Cursor(toks, len(text) + 1)
    obj = _objexpr(cur, set(indecs))
    cur.done()
    return obj


def _quote(s):
    return '"' + s.replace("\\", "\\\\").replace('"', '\\"') + '"'


def format_presentation(pres):
    """Canonical text; ``parse(format_presentation(p)).presentation == p``."""
    order = pres.indecs
    lines = [f"category {_quote(pres.name)}", f"n = {pres.n}"]
    if order:
        lines.append("indecomposables: " + ", ".join(order))
    lines += [f"conflation: {c.format(order)}" for c in pres.conflations]
    gens = [i for i in order if i in pres.generator]
    lines.append(f"{pres.generator_mode}: " + (", ".join(gens) or "0"))
    lines += [f"witness {i}: {pres.witnesses[i].format(order)}"
              for i in order if i in pres.witnesses]
    return "\n".join(lines) + "\n"


def load(path):
    with open(path, encoding="utf-8") as fh:
        return parse(fh.read())
