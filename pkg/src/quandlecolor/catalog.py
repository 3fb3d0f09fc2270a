"""Built-in catalog of link diagrams.

Each entry is stored as its relations text, so the crossing tables are
auditable line by line; the conventional arc labellings of the Hopf-link
connected sum (x1..x4) and the Allen-Swenberg link (x1..x45) are kept
as-is, with every crossing written in positive form.
"""

from __future__ import annotations

from .diagram import CatalogEntry, LinkDiagram, parse_relations_file
from .errors import UnknownLinkError

UNKNOT_RELATIONS = "circles: 1\n"

UNLINK2_RELATIONS = "circles: 2\n"

HOPF_RELATIONS = """\
x1 = x1 * x2
x2 = x2 * x1
"""

TREFOIL_RELATIONS = """\
x3 = x1 * x2
x2 = x3 * x1
x1 = x2 * x3
"""

HOPF_SUM_RELATIONS = """\
x2 = x3 * x1
x3 = x2 * x4
x1 = x1 * x3
x4 = x4 * x3
"""

ALLEN_SWENBERG_RELATIONS = """\
x2 = x1 * x26
x26 = x27 * x1
x1 = x2 * x3
x3 = x4 * x1
x4 = x5 * x3
x5 = x6 * x7
x8 = x7 * x6
x29 = x28 * x6
x3 = x6 * x28
x9 = x8 * x7
x7 = x10 * x9
x11 = x9 * x10
x10 = x12 * x11
x13 = x11 * x12
x12 = x14 * x13
x19 = x15 * x14
x22 = x15 * x13
x20 = x16 * x14
x21 = x16 * x13
x14 = x17 * x21
x13 = x18 * x21
x20 = x17 * x22
x19 = x18 * x22
x21 = x23 * x20
x22 = x24 * x20
x26 = x23 * x19
x25 = x24 * x19
x30 = x28 * x29
x29 = x31 * x30
x32 = x30 * x31
x31 = x33 * x32
x34 = x32 * x33
x33 = x35 * x34
x40 = x36 * x35
x38 = x36 * x34
x41 = x37 * x35
x39 = x37 * x34
x35 = x42 * x39
x34 = x43 * x39
x41 = x42 * x38
x40 = x43 * x38
x25 = x44 * x40
x39 = x44 * x41
x27 = x45 * x40
x38 = x45 * x41
"""

_ENTRIES = {
    "unknot": (UNKNOT_RELATIONS, 1),
    "unlink2": (UNLINK2_RELATIONS, 2),
    "hopf": (HOPF_RELATIONS, 2),
    "trefoil": (TREFOIL_RELATIONS, 1),
    "hopf_sum": (HOPF_SUM_RELATIONS, 3),
    "allen_swenberg": (ALLEN_SWENBERG_RELATIONS, 3),
}

CATALOG: dict[str, CatalogEntry] = {
    name: CatalogEntry(name, parse_relations_file(text), components)
    for name, (text, components) in _ENTRIES.items()
}


def catalog_names() -> tuple[str, ...]:
    return tuple(CATALOG)


def catalog_entry(name: str) -> CatalogEntry:
    try:
        return CATALOG[name]
    except KeyError:
        known = ", ".join(CATALOG)
        raise UnknownLinkError(f"unknown link {name!r}; catalog has: {known}") from None


def catalog(name: str) -> LinkDiagram:
    """Return the built-in diagram with the given name."""
    return catalog_entry(name).diagram
