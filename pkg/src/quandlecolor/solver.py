"""Counting and enumerating quandle colorings.

Two independent routes:

* an exact linear-algebra path for Alexander quandles, which turns the
  presentation into an integer coefficient matrix and counts/enumerates
  solutions of the homogeneous system over Z_n through the Smith normal
  form (sound for composite n, where naive row reduction is not);
* a brute-force backtracking search over arc assignments that works for
  any finite quandle and serves as the oracle for the first.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import CapExceededError
from .presentation import QuandlePresentation
from .quandle import AlexanderParams, FiniteQuandle
from .smith import SmithForm, smith_normal_form, solution_count_mod

DEFAULT_CAP = 1_000_000


@dataclass(frozen=True)
class ColoringSystem:
    """Integer coefficient matrix of the homogeneous system over Z_n.

    Column j holds the coefficient of arc j+1.  A positive relation
    ``out = in > over`` contributes +t at in, +(1-t) at over, -1 at out
    (entries combined when arcs coincide); negative relations use 1/t mod n
    in place of t.  Every row sums to zero, so the all-equal coloring is
    always a solution.
    """

    rows: int
    cols: int
    matrix: tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class Coloring:
    """An arc assignment satisfying every relation of its source presentation."""

    colors: tuple[int, ...]  # colors[i] is the color of arc i+1

    @property
    def image_size(self) -> int:
        """Number of distinct colors used."""
        return len(set(self.colors))

    def color_of(self, arc: int) -> int:
        return self.colors[arc - 1]

    def assignment(self) -> dict[int, int]:
        return {arc: c for arc, c in enumerate(self.colors, start=1)}


def build_system(p: QuandlePresentation, params: AlexanderParams) -> ColoringSystem:
    """Coefficient matrix of the coloring equations, one row per relation."""
    t, n = params.t, params.n
    t_inv = params.t_inverse
    rows = []
    for r in p.relations:
        row = [0] * p.arc_count
        coeff = t if r.positive else t_inv
        row[r.in_ - 1] += coeff
        row[r.over - 1] += 1 - coeff
        row[r.out - 1] -= 1
        rows.append(tuple(row))
    return ColoringSystem(rows=len(rows), cols=p.arc_count, matrix=tuple(rows))


def system_smith_form(system: ColoringSystem) -> SmithForm:
    return smith_normal_form(system.matrix, cols=system.cols)


def count_solutions(system: ColoringSystem, n: int) -> int:
    """Exact number of solutions of A*x = 0 (mod n); exact for any n >= 1."""
    return solution_count_mod(system_smith_form(system), n)


def _solution_value_lists(snf: SmithForm, n: int) -> list[range]:
    """Per-coordinate ranges for y with D*y = 0 (mod n); x = V*y enumerates all solutions."""
    lists = []
    for d in snf.diagonal:
        g = gcd(d, n)
        lists.append(range(0, n, n // g))
    lists.extend(range(n) for _ in range(snf.cols - snf.rank))
    return lists


def enumerate_solutions(
    system: ColoringSystem, n: int, cap: int = DEFAULT_CAP
) -> list[Coloring]:
    """All solutions of the system over Z_n, sorted; CapExceededError if too many.

    Torsion coordinates range over the gcd(d_i, n) multiples of n/gcd(d_i, n),
    free coordinates over all of Z_n, and the right transform maps them back
    to arc space.
    """
    snf = system_smith_form(system)
    count = solution_count_mod(snf, n)
    if count > cap:
        raise CapExceededError(cap, count)
    value_lists = _solution_value_lists(snf, n)
    dtype = object if n > 2**25 else np.int64
    v_mod = np.array([[x % n for x in row] for row in snf.col_transform], dtype=dtype)
    found: set[tuple[int, ...]] = set()
    chunk: list[tuple[int, ...]] = []

    def flush() -> None:
        if not chunk:
            return
        ys = np.array(chunk, dtype=dtype)
        xs = ys.dot(v_mod.T) % n  # np.dot, not matmul: works for object dtype too
        found.update(tuple(int(c) for c in row) for row in xs)
        chunk.clear()

    for y in itertools.product(*value_lists):
        chunk.append(y)
        if len(chunk) >= 4096:
            flush()
    flush()
    return [Coloring(colors) for colors in sorted(found)]


def brute_force_colorings(
    p: QuandlePresentation, q: FiniteQuandle, cap: int = DEFAULT_CAP
) -> list[Coloring]:
    """Backtracking enumeration of colorings for an arbitrary finite quandle.

    Arcs are assigned in order of first appearance in the relations (so each
    relation prunes as soon as its three arcs are colored), unconstrained
    arcs last; the result is sorted by assignment.
    """
    order: list[int] = []
    seen: set[int] = set()
    for r in p.relations:
        for arc in (r.in_, r.over, r.out):
            if arc not in seen:
                seen.add(arc)
                order.append(arc)
    for arc in range(1, p.arc_count + 1):
        if arc not in seen:
            order.append(arc)
    position = {arc: i for i, arc in enumerate(order)}
    triggered: list[list] = [[] for _ in order]
    for r in p.relations:
        triggered[max(position[a] for a in r.arcs())].append(r)

    colors = [0] * (p.arc_count + 1)
    found: list[tuple[int, ...]] = []

    def satisfied(idx: int) -> bool:
        for r in triggered[idx]:
            if colors[r.out] != q.apply(colors[r.in_], colors[r.over], r.positive):
                return False
        return True

    def search(idx: int) -> None:
        if idx == len(order):
            if len(found) >= cap:
                raise CapExceededError(cap)
            found.append(tuple(colors[1:]))
            return
        arc = order[idx]
        for c in range(q.order):
            colors[arc] = c
            if satisfied(idx):
                search(idx + 1)
        colors[arc] = 0

    search(0)
    return [Coloring(colors) for colors in sorted(found)]
