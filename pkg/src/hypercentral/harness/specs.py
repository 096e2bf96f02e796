"""Ring spec strings such as ``Tn(GF(2),2)`` or ``prod(Z2,Z3)`` and the rings they denote."""

from __future__ import annotations

import dataclasses
import re
from dataclasses import dataclass

import numpy as np

from ..constructions import FAMILY_KEYWORDS, build_matrix_subring
from ..errors import NotAnIdeal, ParseError
from ..ring import (
    DEFAULT_SIZE_CAP,
    FiniteRing,
    corner_ring,
    cyclic_ring,
    direct_product,
    finite_field,
    load_ring,
    matrix_ring,
    quotient_ring,
)

KEYWORD_FAMILIES = {kw: fam for fam, kw in FAMILY_KEYWORDS.items()}

KINDS = ("Cyclic", "FiniteField", "MatrixRing", "Product", "Quotient", "Corner", "MatrixSubring", "FromFile")


@dataclass(frozen=True)
class ConstructionSpec:
    kind: str
    params: tuple

    def text(self) -> str:
        k, p = self.kind, self.params
        if k == "Cyclic":
            return f"Z{p[0]}"
        if k == "FiniteField":
            return f"GF({p[0]})"
        if k == "MatrixRing":
            return f"M{p[1]}({p[0].text()})"
        if k == "Product":
            return f"prod({p[0].text()},{p[1].text()})"
        if k == "Quotient":
            return f"quot({p[0].text()},{p[1]})"
        if k == "Corner":
            return f"corner({p[0].text()},{p[1]})"
        if k == "MatrixSubring":
            return f"{FAMILY_KEYWORDS[p[0]]}({p[1].text()},{p[2]})"
        return f"@{p[0]}"

    def build(self, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
        R = _build(self, cap)
        return dataclasses.replace(R, name=self.text(), memo=R.memo)


class _Parser:
    def __init__(self, text: str):
        self.s = text.replace(" ", "")
        self.i = 0

    def fail(self, what: str):
        raise ParseError(f"bad ring spec {self.s!r} at position {self.i}: expected {what}")

    def eat(self, token: str):
        if not self.s.startswith(token, self.i):
            self.fail(repr(token))
        self.i += len(token)

    def number(self) -> int:
        m = re.compile(r"\d+").match(self.s, self.i)
        if not m:
            self.fail("a number")
        self.i = m.end()
        return int(m.group())

    def word(self) -> str:
        m = re.compile(r"[A-Za-z]+").match(self.s, self.i)
        return m.group() if m else ""

    def spec(self) -> ConstructionSpec:
        if self.s.startswith("@", self.i):
            path = self.s[self.i + 1 :]
            if not path:
                self.fail("a file path")
            self.i = len(self.s)
            return ConstructionSpec("FromFile", (path,))
        if self.s.startswith("GF(", self.i):
            self.eat("GF(")
            q = self.number()
            self.eat(")")
            return ConstructionSpec("FiniteField", (q,))
        w = self.word()
        if w in KEYWORD_FAMILIES:
            self.i += len(w)
            self.eat("(")
            base = self.spec()
            self.eat(",")
            n = self.number()
            self.eat(")")
            return ConstructionSpec("MatrixSubring", (KEYWORD_FAMILIES[w], base, n))
        if w in ("prod", "quot", "corner"):
            self.i += len(w)
            self.eat("(")
            first = self.spec()
            self.eat(",")
            if w == "prod":
                second = self.spec()
                self.eat(")")
                return ConstructionSpec("Product", (first, second))
            if w == "quot":
                self.eat("strictupper")
                self.eat(")")
                return ConstructionSpec("Quotient", (first, "strictupper"))
            e = self.number()
            self.eat(")")
            return ConstructionSpec("Corner", (first, e))
        if self.s.startswith("Z", self.i):
            self.eat("Z")
            return ConstructionSpec("Cyclic", (self.number(),))
        if self.s.startswith("M", self.i):
            self.eat("M")
            n = self.number()
            self.eat("(")
            base = self.spec()
            self.eat(")")
            return ConstructionSpec("MatrixRing", (base, n))
        self.fail("a ring spec")


def parse_spec(text: str) -> ConstructionSpec:
    p = _Parser(text)
    spec = p.spec()
    if p.i != len(p.s):
        p.fail("end of spec")
    return spec


def strict_upper_mask(R: FiniteRing) -> np.ndarray:
    if R.matrix is None:
        raise NotAnIdeal("strictly upper triangular part is only defined for matrix rings")
    ent = R.matrix.entries
    n = R.matrix.n
    lower = np.tril(np.ones((n, n), dtype=bool))
    return ~(ent[:, lower] != 0).any(axis=1)


def _build(spec: ConstructionSpec, cap: int) -> FiniteRing:
    k, p = spec.kind, spec.params
    if k == "Cyclic":
        if p[0] < 1:
            raise ParseError("Z<n> needs n >= 1")
        return cyclic_ring(p[0])
    if k == "FiniteField":
        return finite_field(p[0])
    if k == "MatrixRing":
        return matrix_ring(p[0].build(cap), p[1], cap)
    if k == "Product":
        return direct_product(p[0].build(cap), p[1].build(cap), cap)
    if k == "Quotient":
        R = p[0].build(cap)
        return quotient_ring(R, strict_upper_mask(R))[0]
    if k == "Corner":
        return corner_ring(p[0].build(cap), p[1])
    if k == "MatrixSubring":
        return build_matrix_subring(p[0], p[1].build(cap), p[2], cap)
    return load_ring(p[0])


def ring_from_spec(text: str, cap: int = DEFAULT_SIZE_CAP) -> FiniteRing:
    return parse_spec(text).build(cap)
