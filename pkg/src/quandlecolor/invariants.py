"""Link invariants built from quandle colorings.

The counting invariant is the number of homomorphisms from a diagram's
fundamental quandle into a fixed finite quandle; the enhanced polynomial
refines it by recording how many distinct colors each coloring uses,
``phi = sum over colorings of q ** image_size``.  ``compare`` sweeps both
invariants across a grid of Alexander quandles and reports whether two
links are distinguished anywhere on the grid.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass
from math import gcd
from typing import Mapping, Union

from .errors import CapExceededError
from .presentation import QuandlePresentation
from .quandle import AlexanderParams, FiniteQuandle
from .solver import (
    DEFAULT_CAP,
    Coloring,
    brute_force_colorings,
    build_system,
    count_solutions,
    enumerate_solutions,
)


@dataclass(frozen=True)
class PhiPolynomial:
    """Sparse polynomial in q: terms maps image size to number of colorings.

    The coefficients sum to the counting invariant, exponents are bounded by
    min(arc count, quandle order), and the q^1 coefficient counts the
    monochromatic colorings (at least the quandle's order, by idempotence).
    """

    terms: tuple[tuple[int, int], ...]  # (exponent, coefficient), ascending

    @classmethod
    def from_counts(cls, counts: Mapping[int, int]) -> "PhiPolynomial":
        return cls(tuple(sorted((e, c) for e, c in counts.items() if c)))

    def as_dict(self) -> dict[int, int]:
        return dict(self.terms)

    def coefficient(self, exponent: int) -> int:
        return self.as_dict().get(exponent, 0)

    def total(self) -> int:
        """Sum of coefficients, i.e. the counting invariant."""
        return sum(c for _, c in self.terms)

    def __str__(self) -> str:
        if not self.terms:
            return "0"
        return " + ".join(f"{c}*q^{e}" for e, c in self.terms)


def all_colorings(
    p: QuandlePresentation, q: FiniteQuandle, cap: int = DEFAULT_CAP
) -> list[Coloring]:
    """Every coloring of p by q, via the exact linear route when q is Alexander."""
    if q.alexander is not None:
        return enumerate_solutions(build_system(p, q.alexander), q.alexander.n, cap)
    return brute_force_colorings(p, q, cap)


def counting_invariant(
    p: QuandlePresentation, q: FiniteQuandle, cap: int = DEFAULT_CAP
) -> int:
    """Number of homomorphisms from the fundamental quandle into q.

    Alexander quandles are counted exactly through the Smith normal form
    (no cap); other quandles fall back to the brute-force search, where
    ``cap`` bounds the enumeration.
    """
    if q.alexander is not None:
        return count_solutions(build_system(p, q.alexander), q.alexander.n)
    return len(brute_force_colorings(p, q, cap))


def phi_polynomial(
    p: QuandlePresentation, q: FiniteQuandle, cap: int = DEFAULT_CAP
) -> PhiPolynomial:
    """The enhanced polynomial; requires enumerating colorings, so the cap applies."""
    colorings = all_colorings(p, q, cap)
    return PhiPolynomial.from_counts(Counter(c.image_size for c in colorings))


def units(n: int) -> tuple[int, ...]:
    return tuple(t for t in range(1, n) if gcd(t, n) == 1)


def involutory_units(n: int) -> tuple[int, ...]:
    """Units t of Z_n with t*t = 1 (mod n): exactly the involutory Alexander quandles.

    Always contains 1 and n-1; composite n can have more (t=3 mod 8, say).
    """
    return tuple(t for t in units(n) if (t * t) % n == 1)


def involutory_analysis(p: QuandlePresentation, n: int) -> tuple[tuple[int, int], ...]:
    """Counting invariant for every involutory Alexander quandle over Z_n.

    Returns (t, count) rows in increasing t; t=1 (the trivial quandle, count
    n ** classes) and t=n-1 are always present.
    """
    if n < 2:
        raise ValueError(f"modulus must be >= 2, got {n}")
    return tuple(
        (t, count_solutions(build_system(p, AlexanderParams(n, t)), n))
        for t in involutory_units(n)
    )


TPolicy = Union[str, int]


def resolve_t_values(policy: TPolicy, n: int) -> tuple[int, ...]:
    """Expand a t policy ('all-units', 'involutory', or a fixed residue) for one n."""
    if policy == "all-units":
        return units(n)
    if policy == "involutory":
        return involutory_units(n)
    if isinstance(policy, int):
        return (AlexanderParams(n, policy).t,)
    raise ValueError(f"unknown t policy {policy!r}")


@dataclass(frozen=True)
class ComparisonCell:
    """One grid point: counts for both links, polynomials when enumerable."""

    n: int
    t: int
    count_a: int
    count_b: int
    phi_a: PhiPolynomial | None
    phi_b: PhiPolynomial | None

    @property
    def differs(self) -> bool:
        if self.count_a != self.count_b:
            return True
        return (
            self.phi_a is not None
            and self.phi_b is not None
            and self.phi_a != self.phi_b
        )


@dataclass(frozen=True)
class DistinguishabilityReport:
    """Counting/polynomial grid for two links plus the resulting verdict."""

    link_a: str
    link_b: str
    t_policy: str
    grid: tuple[ComparisonCell, ...]

    @property
    def distinguished(self) -> bool:
        return any(cell.differs for cell in self.grid)

    @property
    def verdict(self) -> str:
        return "distinguished" if self.distinguished else "not distinguished"

    def to_dict(self) -> dict:
        return {
            "link_a": self.link_a,
            "link_b": self.link_b,
            "t_policy": self.t_policy,
            "grid": [
                {
                    "n": cell.n,
                    "t": cell.t,
                    "count_a": cell.count_a,
                    "count_b": cell.count_b,
                    "phi_a": None if cell.phi_a is None else list(cell.phi_a.terms),
                    "phi_b": None if cell.phi_b is None else list(cell.phi_b.terms),
                }
                for cell in self.grid
            ],
            "verdict": self.verdict,
        }


def compare(
    a: QuandlePresentation,
    b: QuandlePresentation,
    n_values,
    t_policy: TPolicy = "all-units",
    cap: int = DEFAULT_CAP,
    link_a: str = "a",
    link_b: str = "b",
) -> DistinguishabilityReport:
    """Sweep both links over the (n, t) grid and compare counts and polynomials.

    Cells whose enumeration would exceed the cap keep their exact counts and
    drop the polynomials (count-only cells) rather than failing the grid.
    Cells are evaluated independently and assembled in (n, t) order.
    """
    cells = []
    for n in sorted(set(int(n) for n in n_values)):
        for t in resolve_t_values(t_policy, n):
            params = AlexanderParams(n, t)
            sys_a = build_system(a, params)
            sys_b = build_system(b, params)
            count_a = count_solutions(sys_a, n)
            count_b = count_solutions(sys_b, n)
            phi_a = phi_b = None
            try:
                phi_a = PhiPolynomial.from_counts(
                    Counter(c.image_size for c in enumerate_solutions(sys_a, n, cap))
                )
                phi_b = PhiPolynomial.from_counts(
                    Counter(c.image_size for c in enumerate_solutions(sys_b, n, cap))
                )
            except CapExceededError:
                phi_a = phi_b = None
            cells.append(ComparisonCell(n, t, count_a, count_b, phi_a, phi_b))
    return DistinguishabilityReport(
        link_a=link_a,
        link_b=link_b,
        t_policy=str(t_policy),
        grid=tuple(cells),
    )
