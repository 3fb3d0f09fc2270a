"""Oriented link diagrams as arcs and signed crossings.

A diagram is the canonical input object: arcs are numbered 1..arc_count,
each crossing records which arc dives under (entering as ``under_in``,
leaving as ``under_out``) and which arc passes over, and ``sign`` selects
the quandle operation the crossing induces (+1 for ``>``, -1 for ``>^-1``).
Closed components that touch no crossing are counted by ``free_circles``
and occupy the top arc indices.

A crossing table sometimes records a relation with the producing arc on
the left even where the strand's orientation runs the other way (the same
equation rearranged), so an arc may legitimately be the written under-out
of two crossings.  Validation therefore enforces the structural truth
underneath: every arc has exactly two under-strand endpoints (or none, for
closed circles that only pass over), which makes the under-strand adjacency
graph 2-regular and decomposes it into the link's components.

Two parsers are provided: the line-oriented relations grammar
(``x2 = x3 * x1`` / ``x1 = x2 / x3``, optional ``circles: k`` header,
``#`` comments) and planar-diagram codes (``X(a,b,c,d)`` quadruples).
"""

from __future__ import annotations

import re
from dataclasses import dataclass

from .errors import DiagramError, PDCodeError, RelationSyntaxError


@dataclass(frozen=True)
class Crossing:
    """One crossing: ``under_out = under_in > over`` (or ``>^-1`` when sign is -1).

    ``under_in == under_out`` is allowed; it means the under-strand's arc
    closes into itself through this crossing (a kink, or a component that
    passes under exactly once).
    """

    sign: int
    under_in: int
    under_out: int
    over: int

    def __post_init__(self) -> None:
        if self.sign not in (1, -1):
            raise DiagramError(f"crossing sign must be +1 or -1, got {self.sign}")

    @property
    def positive(self) -> bool:
        return self.sign == 1


@dataclass(frozen=True)
class LinkDiagram:
    """Immutable oriented link diagram.

    Invariants enforced on construction:

    * every crossing index lies in [1, arc_count];
    * arcs referenced by crossings are exactly 1..(arc_count - free_circles),
      the remaining top indices being the free circles;
    * every arc has 0 or 2 under-strand endpoints across all crossings.
    """

    arc_count: int
    crossings: tuple[Crossing, ...]
    free_circles: int = 0

    def __post_init__(self) -> None:
        object.__setattr__(self, "crossings", tuple(self.crossings))
        if self.arc_count < 1:
            raise DiagramError("a diagram needs at least one arc")
        if self.free_circles < 0:
            raise DiagramError("free_circles must be >= 0")
        referenced = set()
        for c in self.crossings:
            for arc in (c.under_in, c.under_out, c.over):
                if not 1 <= arc <= self.arc_count:
                    raise DiagramError(
                        f"arc x{arc} out of range 1..{self.arc_count}"
                    )
                referenced.add(arc)
        bound = self.arc_count - self.free_circles
        if len(referenced) != bound or (referenced and max(referenced) != bound):
            raise DiagramError(
                f"referenced arcs must be exactly x1..x{bound} "
                f"with {self.free_circles} free circles above"
            )
        ends: dict[int, int] = {}
        outs: dict[int, int] = {}
        for c in self.crossings:
            ends[c.under_in] = ends.get(c.under_in, 0) + 1
            ends[c.under_out] = ends.get(c.under_out, 0) + 1
            outs[c.under_out] = outs.get(c.under_out, 0) + 1
        for arc, k in sorted(ends.items()):
            if k == 2:
                continue
            if outs.get(arc, 0) >= 2:
                raise DiagramError(
                    f"arc x{arc} is the under-out of {outs[arc]} crossings "
                    f"({k} under-strand endpoints in total, expected 2)"
                )
            raise DiagramError(
                f"arc x{arc} has {k} under-strand endpoints, expected 2 "
                "(dangling under-strand)"
            )

    @property
    def crossing_count(self) -> int:
        return len(self.crossings)

    def referenced_arcs(self) -> frozenset[int]:
        """Arcs that appear in some crossing (in any role)."""
        return frozenset(
            arc for c in self.crossings for arc in (c.under_in, c.under_out, c.over)
        )

    def components(self) -> tuple[frozenset[int], ...]:
        """Partition of arcs into link components.

        Arcs joined through a crossing's under-strand belong to the same
        component; arcs never passing under (over-only circles and free
        circles) are singleton components.  Sorted by smallest member.
        """
        parent = list(range(self.arc_count + 1))

        def find(x: int) -> int:
            while parent[x] != x:
                parent[x] = parent[parent[x]]
                x = parent[x]
            return x

        for c in self.crossings:
            ra, rb = find(c.under_in), find(c.under_out)
            if ra != rb:
                parent[ra] = rb
        groups: dict[int, set[int]] = {}
        for arc in range(1, self.arc_count + 1):
            groups.setdefault(find(arc), set()).add(arc)
        return tuple(
            frozenset(g) for g in sorted(groups.values(), key=min)
        )

    def component_count(self) -> int:
        return len(self.components())

    def render_relations(self) -> str:
        """Render to the relations-file grammar; parsing it back is the identity."""
        return render_relations_text(
            ((c.under_out, c.under_in, c.over, c.positive) for c in self.crossings),
            self.free_circles,
        )


@dataclass(frozen=True)
class CatalogEntry:
    """A named built-in diagram with its expected component count."""

    name: str
    diagram: LinkDiagram
    expected_components: int

    def __post_init__(self) -> None:
        if self.diagram.component_count() != self.expected_components:
            raise DiagramError(
                f"catalog entry {self.name}: derived component count "
                f"{self.diagram.component_count()} != {self.expected_components}"
            )


def render_relations_text(rows, free_circles: int) -> str:
    lines = []
    if free_circles:
        lines.append(f"circles: {free_circles}")
    for out, in_, over, positive in rows:
        op = "*" if positive else "/"
        lines.append(f"x{out} = x{in_} {op} x{over}")
    return "\n".join(lines) + "\n"


# ---------------------------------------------------------------------------
# Relations-file parser


class _LineScanner:
    """Tiny cursor scanner so syntax errors carry 1-based line/column."""

    def __init__(self, text: str, lineno: int):
        self.text = text
        self.lineno = lineno
        self.pos = 0

    def fail(self, message: str):
        raise RelationSyntaxError(self.lineno, self.pos + 1, message)

    def skip_spaces(self) -> None:
        while self.pos < len(self.text) and self.text[self.pos] in " \t":
            self.pos += 1

    def literal(self, ch: str) -> None:
        self.skip_spaces()
        if self.pos >= len(self.text) or self.text[self.pos] != ch:
            self.fail(f"expected '{ch}'")
        self.pos += 1

    def arc_index(self) -> int:
        self.skip_spaces()
        if self.pos >= len(self.text) or self.text[self.pos] != "x":
            self.fail("expected arc reference 'x<index>'")
        start = self.pos
        self.pos += 1
        digits = ""
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            digits += self.text[self.pos]
            self.pos += 1
        if not digits:
            self.fail("expected digits after 'x'")
        value = int(digits)
        if value < 1:
            self.pos = start
            self.fail("arc index must be >= 1")
        return value

    def operator(self) -> bool:
        self.skip_spaces()
        if self.pos < len(self.text) and self.text[self.pos] in "*/":
            positive = self.text[self.pos] == "*"
            self.pos += 1
            return positive
        self.fail("expected '*' or '/'")

    def end(self) -> None:
        self.skip_spaces()
        if self.pos != len(self.text):
            self.fail("unexpected trailing text")


_CIRCLES_RE = re.compile(r"^circles\s*:\s*(\d+)\s*$")


def parse_relations_file(text: str) -> LinkDiagram:
    """Parse the line-oriented relations grammar into a diagram.

    Each relation line ``x<out> = x<in> * x<over>`` is a positive crossing
    and ``/`` a negative one; line order becomes crossing order.  An
    optional header ``circles: <k>`` (before any relation) declares closed
    components without crossings.  Blank lines and ``#`` comments are
    ignored.  Arc indices referenced must be contiguous from 1; free-circle
    arcs are appended above them.
    """
    crossings: list[Crossing] = []
    free_circles = 0
    saw_circles = False
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].rstrip()
        if not line.strip():
            continue
        stripped = line.strip()
        m = _CIRCLES_RE.match(stripped)
        if m or stripped.startswith("circles"):
            if m is None:
                raise RelationSyntaxError(lineno, 1, "malformed circles header")
            if saw_circles:
                raise RelationSyntaxError(lineno, 1, "duplicate circles header")
            if crossings:
                raise RelationSyntaxError(
                    lineno, 1, "circles header must precede all relations"
                )
            saw_circles = True
            free_circles = int(m.group(1))
            continue
        sc = _LineScanner(line, lineno)
        out = sc.arc_index()
        sc.literal("=")
        in_ = sc.arc_index()
        positive = sc.operator()
        over = sc.arc_index()
        sc.end()
        crossings.append(
            Crossing(1 if positive else -1, under_in=in_, under_out=out, over=over)
        )

    referenced = {a for c in crossings for a in (c.under_in, c.under_out, c.over)}
    max_ref = max(referenced, default=0)
    if max_ref == 0 and free_circles == 0:
        raise DiagramError("empty input: declare relations or a circles header")
    missing = sorted(set(range(1, max_ref + 1)) - referenced)
    if missing:
        raise DiagramError(
            f"arc index gap: x{missing[0]} is never referenced "
            f"(indices must be contiguous from 1 to {max_ref})"
        )
    return LinkDiagram(
        arc_count=max_ref + free_circles,
        crossings=tuple(crossings),
        free_circles=free_circles,
    )


# ---------------------------------------------------------------------------
# PD-code parser

_PD_TERM = re.compile(
    r"X\(\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*,\s*(\d+)\s*\)", re.IGNORECASE
)


def parse_pd_code(text: str) -> LinkDiagram:
    """Parse whitespace-separated ``X(a,b,c,d)`` quadruples into a diagram.

    Edges are listed counterclockwise starting at the incoming under-edge
    ``a``; the under-strand exits at ``c``.  A crossing is positive when its
    over-strand runs from ``d`` to ``b`` and negative the other way; which
    of the two holds is inferred by propagating edge directions globally
    (every edge must arrive at one of its two crossing slots and depart from
    the other).  Components that never pass under have a free direction and
    default to positive crossings.

    Diagram arcs are the over-strand-maximal runs of edges, numbered by
    smallest edge label.  Rendering the extracted relations and re-parsing
    them reproduces the same diagram.
    """
    quads: list[tuple[int, int, int, int]] = []
    pos = 0
    while pos < len(text):
        if text[pos].isspace():
            pos += 1
            continue
        m = _PD_TERM.match(text, pos)
        if m is None:
            raise PDCodeError(f"malformed quadruple at offset {pos + 1}")
        quad = tuple(int(g) for g in m.groups())
        if min(quad) < 1:
            raise PDCodeError(f"edge labels must be >= 1: {quad}")
        quads.append(quad)
        pos = m.end()
    if not quads:
        raise PDCodeError(
            "empty PD code: a diagram without crossings cannot be written in "
            "PD form (use the relations format with a circles header)"
        )

    occurrences: dict[int, list[tuple[int, str]]] = {}
    for i, (a, b, c, d) in enumerate(quads):
        for edge, slot in ((a, "a"), (b, "b"), (c, "c"), (d, "d")):
            occurrences.setdefault(edge, []).append((i, slot))
    for edge, occs in occurrences.items():
        if len(occs) != 2:
            raise PDCodeError(
                f"edge {edge} appears {len(occs)} time(s); every edge label "
                "must appear exactly twice"
            )

    # Orientation of each crossing: True when the over-strand runs d -> b
    # (positive).  In slot terms, 'a' arrives, 'c' departs, 'b' departs iff
    # positive, 'd' departs iff negative.
    orientation: list[bool | None] = [None] * len(quads)
    forced: list[tuple[int, bool]] = []
    linked: dict[int, list[tuple[int, bool]]] = {i: [] for i in range(len(quads))}
    for edge, ((i, s1), (j, s2)) in occurrences.items():
        under1, under2 = s1 in "ac", s2 in "ac"
        if under1 and under2:
            if s1 == s2:
                kind = "incoming" if s1 == "a" else "outgoing"
                raise PDCodeError(
                    f"inconsistent orientation: edge {edge} is the {kind} "
                    "under-edge of two crossings"
                )
        elif under1 or under2:
            (uc, us), (oc, os) = ((i, s1), (j, s2)) if under1 else ((j, s2), (i, s1))
            must_depart = us == "a"  # arrived at the under slot, so departs here
            forced.append((oc, must_depart if os == "b" else not must_depart))
        else:
            if i == j:
                continue  # b and d of one crossing: satisfied either way
            same = s1 != s2  # b/d mix ties orientations; b/b and d/d oppose
            linked[i].append((j, same))
            linked[j].append((i, same))

    def assign(i: int, value: bool, queue: list[int]) -> None:
        if orientation[i] is None:
            orientation[i] = value
            queue.append(i)
        elif orientation[i] != value:
            raise PDCodeError(
                "inconsistent orientation: no assignment of strand directions "
                "satisfies all quadruples"
            )

    def propagate(queue: list[int]) -> None:
        while queue:
            i = queue.pop()
            for j, same in linked[i]:
                assign(j, orientation[i] if same else not orientation[i], queue)

    queue: list[int] = []
    for i, value in forced:
        assign(i, value, queue)
    propagate(queue)
    for i in range(len(quads)):
        if orientation[i] is None:
            assign(i, True, queue)
            propagate(queue)

    # Arcs: edges merged across over-passages, numbered by smallest edge.
    parent: dict[int, int] = {e: e for e in occurrences}

    def find(e: int) -> int:
        while parent[e] != e:
            parent[e] = parent[parent[e]]
            e = parent[e]
        return e

    for a, b, c, d in quads:
        ra, rb = find(b), find(d)
        if ra != rb:
            parent[ra] = rb
    classes: dict[int, list[int]] = {}
    for e in occurrences:
        classes.setdefault(find(e), []).append(e)
    arc_of = {}
    for arc_id, members in enumerate(sorted(classes.values(), key=min), start=1):
        for e in members:
            arc_of[e] = arc_id

    crossings = tuple(
        Crossing(
            1 if orientation[i] else -1,
            under_in=arc_of[a],
            under_out=arc_of[c],
            over=arc_of[b],
        )
        for i, (a, b, c, d) in enumerate(quads)
    )
    return LinkDiagram(arc_count=len(classes), crossings=crossings, free_circles=0)


# ---------------------------------------------------------------------------
# Diagram surgery: connected sum and Reidemeister moves


def _under_slots(crossings, arc: int) -> list[tuple[int, str]]:
    """(crossing index, 'in'|'out') under-strand occurrences of ``arc``, in order."""
    slots = []
    for i, c in enumerate(crossings):
        if c.under_in == arc:
            slots.append((i, "in"))
        if c.under_out == arc:
            slots.append((i, "out"))
    return slots


def _replace_slot(crossings: list[Crossing], slot: tuple[int, str], new: int) -> None:
    i, which = slot
    c = crossings[i]
    if which == "in":
        crossings[i] = Crossing(c.sign, new, c.under_out, c.over)
    else:
        crossings[i] = Crossing(c.sign, c.under_in, new, c.over)


def _rename_arc(crossings: list[Crossing], old: int, new: int) -> None:
    for i, c in enumerate(crossings):
        if old in (c.under_in, c.under_out, c.over):
            crossings[i] = Crossing(
                c.sign,
                new if c.under_in == old else c.under_in,
                new if c.under_out == old else c.under_out,
                new if c.over == old else c.over,
            )


def _normalized(crossings, free_circles: int) -> LinkDiagram:
    """Relabel referenced arcs to 1..R (order-preserving), free circles above."""
    referenced = sorted({a for c in crossings for a in (c.under_in, c.under_out, c.over)})
    relabel = {old: i for i, old in enumerate(referenced, start=1)}
    new = tuple(
        Crossing(c.sign, relabel[c.under_in], relabel[c.under_out], relabel[c.over])
        for c in crossings
    )
    return LinkDiagram(
        arc_count=len(referenced) + free_circles,
        crossings=new,
        free_circles=free_circles,
    )


def connected_sum(d1: LinkDiagram, d2: LinkDiagram, a1: int, a2: int) -> LinkDiagram:
    """Splice arc ``a2`` of ``d2`` into arc ``a1`` of ``d1``.

    Arcs of d2 are renumbered above d1's, a2 is merged into a1, and when
    both spliced arcs have under-strand endpoints one new arc closes the
    band (one endpoint from each side moves onto it).  Crossings are
    untouched otherwise, so the crossing count is the sum of the inputs'.
    """
    if not 1 <= a1 <= d1.arc_count:
        raise DiagramError(f"arc x{a1} out of range for the first diagram")
    if not 1 <= a2 <= d2.arc_count:
        raise DiagramError(f"arc x{a2} out of range for the second diagram")
    off = d1.arc_count
    cross1 = list(d1.crossings)
    cross2 = [
        Crossing(c.sign, c.under_in + off, c.under_out + off, c.over + off)
        for c in d2.crossings
    ]
    b = a2 + off
    occ1 = _under_slots(cross1, a1)
    occ2 = _under_slots(cross2, b)
    a1_referenced = a1 in d1.referenced_arcs()
    b_referenced = a2 in d2.referenced_arcs()

    if occ1 and occ2:
        # Band between two under-strand arcs: the new arc takes the
        # downstream endpoint of a1 and the upstream endpoint of a2.
        band = off + d2.arc_count + 1
        slot1 = next((s for s in occ1 if s[1] == "in"), occ1[-1])
        slot2 = next((s for s in occ2 if s[1] == "out"), occ2[-1])
        _replace_slot(cross1, slot1, band)
        _replace_slot(cross2, slot2, band)
        _rename_arc(cross2, b, a1)
        free = d1.free_circles + d2.free_circles
    else:
        # At least one side is a closed circle: plain merge, no band arc.
        _rename_arc(cross2, b, a1)
        free = d1.free_circles + d2.free_circles
        free -= (0 if a1_referenced else 1) + (0 if b_referenced else 1)
        if not (a1_referenced or b_referenced):
            free += 1  # two free circles merge into one
    return _normalized(cross1 + cross2, free)


def reidemeister_r1(d: LinkDiagram, arc: int, sign: int = 1) -> LinkDiagram:
    """Insert a kink on ``arc``: new crossing with relation a' = a > a (or >^-1).

    On an arc bounded by crossings this splits the arc in two; on a closed
    circle (free or over-only) the kink cuts it once, so the arc count is
    unchanged and the circle stops being free.
    """
    if not 1 <= arc <= d.arc_count:
        raise DiagramError(f"arc x{arc} out of range 1..{d.arc_count}")
    if sign not in (1, -1):
        raise DiagramError(f"sign must be +1 or -1, got {sign}")
    cross = list(d.crossings)
    occ = _under_slots(cross, arc)
    free = d.free_circles - (0 if arc in d.referenced_arcs() else 1)
    if occ:
        split = d.arc_count + 1
        _replace_slot(cross, occ[-1], split)
        cross.append(Crossing(sign, under_in=arc, under_out=split, over=arc))
    else:
        cross.append(Crossing(sign, under_in=arc, under_out=arc, over=arc))
    return _normalized(cross, free)


def reidemeister_r2(d: LinkDiagram, arc: int, over_arc: int) -> LinkDiagram:
    """Poke ``arc`` under ``over_arc``: crossings c = a > b then a'' = c >^-1 b.

    Adds two crossings of opposite operation and two arcs (one when ``arc``
    is a closed circle, which the poke cuts twice into two arcs).
    """
    if not 1 <= arc <= d.arc_count:
        raise DiagramError(f"arc x{arc} out of range 1..{d.arc_count}")
    if not 1 <= over_arc <= d.arc_count:
        raise DiagramError(f"arc x{over_arc} out of range 1..{d.arc_count}")
    referenced = d.referenced_arcs()
    cross = list(d.crossings)
    occ = _under_slots(cross, arc)
    free = d.free_circles
    if arc not in referenced:
        free -= 1
    if over_arc != arc and over_arc not in referenced:
        free -= 1
    middle = d.arc_count + 1
    if occ:
        tail = d.arc_count + 2
        _replace_slot(cross, occ[-1], tail)
    else:
        tail = arc
    cross.append(Crossing(1, under_in=arc, under_out=middle, over=over_arc))
    cross.append(Crossing(-1, under_in=middle, under_out=tail, over=over_arc))
    return _normalized(cross, free)


def undo_reidemeister_r1(d: LinkDiagram) -> LinkDiagram:
    """Remove the kink appended by :func:`reidemeister_r1` (its inverse move)."""
    if not d.crossings:
        raise DiagramError("no crossing to remove")
    last = d.crossings[-1]
    if last.over != last.under_in:
        raise DiagramError("last crossing is not a kink")
    arc, split = last.under_in, last.under_out
    cross = list(d.crossings[:-1])
    free = d.free_circles
    if split == arc:
        if all(arc not in (c.under_in, c.under_out, c.over) for c in cross):
            free += 1  # the kinked circle is free again
    else:
        _rename_arc(cross, split, arc)
    return _normalized(cross, free)


def undo_reidemeister_r2(d: LinkDiagram) -> LinkDiagram:
    """Remove the poke appended by :func:`reidemeister_r2` (its inverse move)."""
    if len(d.crossings) < 2:
        raise DiagramError("need two crossings to remove")
    c1, c2 = d.crossings[-2], d.crossings[-1]
    if not (
        c1.sign == 1
        and c2.sign == -1
        and c1.under_out == c2.under_in
        and c1.over == c2.over
    ):
        raise DiagramError("last two crossings are not an opposite-operation poke")
    arc, tail, over_arc = c1.under_in, c2.under_out, c1.over
    cross = list(d.crossings[:-2])
    if tail != arc:
        _rename_arc(cross, tail, arc)
    free = d.free_circles
    remaining = {a for c in cross for a in (c.under_in, c.under_out, c.over)}
    if arc not in remaining:
        free += 1
    if over_arc != arc and over_arc not in remaining:
        free += 1
    return _normalized(cross, free)
