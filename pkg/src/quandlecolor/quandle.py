"""Finite quandles as explicit operation tables.

A quandle is a set with a binary operation ``x > y`` that is idempotent,
right-invertible, and self-distributive.  Tables are validated against all
three axioms on construction, and every quandle carries the dual table for
the inverse operation ``x >^-1 y``.  The Alexander family over Z_n
(``x > y = t*x + (1-t)*y`` for a unit t) is the workhorse here; its closed
form is used to build the table, but validation and all downstream
computations treat the table as ground truth.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import gcd

import numpy as np

from .errors import (
    IdempotenceError,
    NotAUnitError,
    QuandleTableError,
    RightInvertibilityError,
    SelfDistributivityError,
)

Table = tuple[tuple[int, ...], ...]


@dataclass(frozen=True)
class AlexanderParams:
    """Modulus n and unit multiplier t of an Alexander quandle over Z_n.

    t is stored as its canonical residue; gcd(n, t) must be 1 so that the
    dual operation (which needs 1/t mod n) exists.
    """

    n: int
    t: int

    def __post_init__(self) -> None:
        if self.n < 2:
            raise ValueError(f"modulus must be >= 2, got {self.n}")
        object.__setattr__(self, "t", self.t % self.n)
        if gcd(self.n, self.t) != 1:
            raise NotAUnitError(self.t, self.n)

    @property
    def s(self) -> int:
        """The second coefficient 1 - t, reduced mod n."""
        return (1 - self.t) % self.n

    @property
    def t_inverse(self) -> int:
        return pow(self.t, -1, self.n)


@dataclass(frozen=True)
class FiniteQuandle:
    """Validated quandle on {0, ..., order-1}.

    ``op[x][y]`` is x > y and ``dual[x][y]`` is x >^-1 y, so
    ``dual[op[x][y]][y] == x`` and ``op[dual[x][y]][y] == x`` always hold.
    ``alexander`` is set when the table came from the Alexander/Takasaki
    constructors, letting solvers pick the exact linear-algebra route.
    Instances are immutable; build them through :func:`validate` or the
    constructors below.
    """

    order: int
    op: Table
    dual: Table
    alexander: AlexanderParams | None = None

    def apply(self, x: int, y: int, positive: bool = True) -> int:
        """x > y when positive, x >^-1 y otherwise."""
        return self.op[x][y] if positive else self.dual[x][y]

    def is_involutory(self) -> bool:
        """True iff the operation is its own inverse: (x > y) > y == x for all x, y.

        Decided from the table, not from any closed form; for Alexander
        quandles this is equivalent to t^2 = 1 (mod n), including the
        extra units that appear at composite n (e.g. t=3 mod 8).
        """
        op = self.op
        return all(
            op[op[x][y]][y] == x for x in range(self.order) for y in range(self.order)
        )


def validate(table, alexander: AlexanderParams | None = None) -> FiniteQuandle:
    """Check all three quandle axioms and return the validated quandle.

    ``table`` is any m x m nested sequence of ints in [0, m-1].  Raises
    IdempotenceError, RightInvertibilityError, or SelfDistributivityError
    with a witness for the first violated axiom, in that order.
    """
    op = np.asarray(table, dtype=np.int64)
    if op.ndim != 2 or op.shape[0] != op.shape[1] or op.shape[0] == 0:
        raise QuandleTableError(f"expected a nonempty square table, got shape {op.shape}")
    m = op.shape[0]
    if op.min() < 0 or op.max() >= m:
        raise QuandleTableError(f"table entries must lie in [0, {m - 1}]")

    diag = np.diagonal(op)
    bad = np.nonzero(diag != np.arange(m))[0]
    if bad.size:
        raise IdempotenceError(int(bad[0]))

    dual = np.empty_like(op)
    for y in range(m):
        col = op[:, y]
        if len(np.unique(col)) != m:
            raise RightInvertibilityError(y)
        inverse = np.empty(m, dtype=np.int64)
        inverse[col] = np.arange(m)
        dual[:, y] = inverse

    # (x > y) > z versus (x > z) > (y > z), all m^3 triples at once
    left = op[op, :]
    right = op[op[:, None, :], op[None, :, :]]
    if not np.array_equal(left, right):
        x, y, z = (int(v) for v in np.argwhere(left != right)[0])
        raise SelfDistributivityError(x, y, z)

    return FiniteQuandle(
        order=m,
        op=tuple(tuple(int(v) for v in row) for row in op),
        dual=tuple(tuple(int(v) for v in row) for row in dual),
        alexander=alexander,
    )


def alexander(n: int, t: int) -> FiniteQuandle:
    """Alexander quandle on Z_n: x > y = t*x + (1-t)*y mod n.

    Requires gcd(n, t) = 1 (NotAUnitError otherwise).  At t=1 this is the
    trivial quandle x > y = x.
    """
    params = AlexanderParams(n, t)
    t = params.t
    table = [[(t * x + (1 - t) * y) % n for y in range(n)] for x in range(n)]
    return validate(table, alexander=params)


def takasaki(n: int) -> FiniteQuandle:
    """Takasaki quandle on Z_n: x > y = 2y - x mod n; same table as alexander(n, n-1)."""
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return alexander(n, n - 1)


def trivial(m: int) -> FiniteQuandle:
    """Trivial quandle of order m: x > y = x for all y."""
    if m < 1:
        raise ValueError(f"order must be >= 1, got {m}")
    table = [[x] * m for x in range(m)]
    return validate(table)


def parse_quandle_file(text: str) -> FiniteQuandle:
    """Parse the table file format: a line ``order: m`` then m rows of m ints."""
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("#")]
    if not lines or not lines[0].startswith("order:"):
        raise QuandleTableError("first line must be 'order: <m>'")
    try:
        m = int(lines[0].split(":", 1)[1])
    except ValueError:
        raise QuandleTableError("first line must be 'order: <m>'") from None
    if m < 1:
        raise QuandleTableError(f"order must be >= 1, got {m}")
    if len(lines) - 1 != m:
        raise QuandleTableError(f"expected {m} table rows, found {len(lines) - 1}")
    table = []
    for i, ln in enumerate(lines[1:]):
        try:
            row = [int(tok) for tok in ln.split()]
        except ValueError:
            raise QuandleTableError(f"row {i + 1}: entries must be integers") from None
        if len(row) != m:
            raise QuandleTableError(f"row {i + 1}: expected {m} entries, found {len(row)}")
        table.append(row)
    return validate(table)


def render_quandle_file(q: FiniteQuandle) -> str:
    """Inverse of :func:`parse_quandle_file`."""
    lines = [f"order: {q.order}"]
    lines.extend(" ".join(str(v) for v in row) for row in q.op)
    return "\n".join(lines) + "\n"
