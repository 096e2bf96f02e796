"""The default collection of small rings that the suites run over."""

from __future__ import annotations

from dataclasses import dataclass, field

from ..constructions import FAMILIES, FAMILY_KEYWORDS
from ..errors import ConstructionNotARing, RingError, SizeCapExceeded
from ..ring import FiniteRing
from .specs import ConstructionSpec, parse_spec

DEFAULT_CATALOG_CAP = 256

BASE_SPECS = (
    "Z2",
    "Z3",
    "Z4",
    "Z6",
    "Z8",
    "Z9",
    "Z12",
    "Z16",
    "GF(2)",
    "GF(3)",
    "GF(4)",
    "GF(8)",
    "GF(9)",
    "M2(GF(2))",
    "prod(Z2,Z3)",
    "prod(GF(2),prod(GF(2),GF(2)))",
    "prod(Z4,GF(2))",
    "quot(Tn(GF(2),3),strictupper)",
)

SUBRING_BASES = ("GF(2)", "Z4", "Z8", "Z16")


def default_specs() -> list[str]:
    specs = list(BASE_SPECS)
    for base in SUBRING_BASES:
        for n in (2, 3):
            for fam in FAMILIES:
                specs.append(f"{FAMILY_KEYWORDS[fam]}({base},{n})")
    return specs


@dataclass
class CatalogEntry:
    name: str
    spec: ConstructionSpec
    ring: FiniteRing
    note: str = ""


@dataclass
class Catalog:
    entries: list[CatalogEntry] = field(default_factory=list)
    skipped: list[tuple[str, str]] = field(default_factory=list)

    def __len__(self) -> int:
        return len(self.entries)

    def __iter__(self):
        return iter(self.entries)

    def names(self) -> list[str]:
        return [e.name for e in self.entries]

    def get(self, name: str) -> FiniteRing:
        for e in self.entries:
            if e.name == name:
                return e.ring
        raise KeyError(name)


def build_catalog(cap: int = DEFAULT_CATALOG_CAP, extra: list[str] = (), specs: list[str] | None = None) -> Catalog:
    """Build every spec within the size cap; oversized or non-closed ones are skipped with a note.

    Entries from ``extra`` (typically ``@file.json``) are appended after the
    defaults and must validate; their errors propagate.
    """
    cat = Catalog()
    seen = set()
    for text in list(default_specs() if specs is None else specs):
        spec = parse_spec(text)
        try:
            R = spec.build(cap)
        except SizeCapExceeded as exc:
            cat.skipped.append((text, f"size cap: {exc}"))
            continue
        except ConstructionNotARing as exc:
            cat.skipped.append((text, f"not a ring: {exc}"))
            continue
        name = spec.text()
        if name not in seen:
            seen.add(name)
            cat.entries.append(CatalogEntry(name, spec, R))
    for text in extra:
        spec = parse_spec(text)
        R = spec.build(max(cap, R_cap_floor(text)))
        name = spec.text()
        if name in seen:
            raise RingError(f"duplicate catalog entry {name}")
        seen.add(name)
        cat.entries.append(CatalogEntry(name, spec, R, note="user"))
    return cat


def R_cap_floor(text: str) -> int:
    # user files are validated on load whatever their size; the cap applies to constructions
    return 1 << 16 if text.startswith("@") else 0
