"""Exception types shared across the package.

The command-line front end maps these onto exit codes: input and
validation problems exit 2, enumeration caps exit 3, and a non-unit
multiplier exits 4.
"""

from __future__ import annotations


class QuandleColorError(Exception):
    """Base class for all errors raised by this package."""


class InputError(QuandleColorError):
    """Malformed textual input (relations file, PD code, quandle table)."""


class RelationSyntaxError(InputError):
    """A relations file line does not match the grammar."""

    def __init__(self, line: int, column: int, message: str):
        self.line = line
        self.column = column
        super().__init__(f"line {line}, column {column}: {message}")


class PDCodeError(InputError):
    """A PD code is malformed or admits no consistent orientation."""


class QuandleTableError(InputError):
    """A quandle table file is malformed or out of range."""


class DiagramError(QuandleColorError):
    """A diagram violates a structural invariant (dangling arc, bad index, ...)."""


class UnknownLinkError(QuandleColorError):
    """Requested name is not in the built-in catalog."""


class AxiomError(QuandleColorError):
    """An operation table fails one of the three quandle axioms.

    ``witness`` holds the elements exhibiting the failure.
    """

    def __init__(self, message: str, witness: tuple[int, ...]):
        self.witness = witness
        super().__init__(message)


class IdempotenceError(AxiomError):
    """Axiom 1 failure: some x with x > x != x."""

    def __init__(self, x: int):
        super().__init__(f"idempotence fails at x={x}", (x,))


class RightInvertibilityError(AxiomError):
    """Axiom 2 failure: some column y whose map x -> x > y is not a bijection."""

    def __init__(self, y: int):
        super().__init__(f"column {y} is not a bijection", (y,))


class SelfDistributivityError(AxiomError):
    """Axiom 3 failure: a triple with (x > y) > z != (x > z) > (y > z)."""

    def __init__(self, x: int, y: int, z: int):
        super().__init__(f"self-distributivity fails at (x,y,z)=({x},{y},{z})", (x, y, z))


class NotAUnitError(QuandleColorError):
    """The multiplier t is not invertible modulo n."""

    def __init__(self, t: int, n: int):
        self.t = t
        self.n = n
        super().__init__(f"t={t} is not a unit modulo n={n}")


class CapExceededError(QuandleColorError):
    """Enumeration would produce more colorings than the caller's cap.

    ``count`` is the exact number when known (linear-algebra path) and
    None when the search was aborted early (brute-force path).
    """

    def __init__(self, cap: int, count: int | None = None):
        self.cap = cap
        self.count = count
        if count is None:
            super().__init__(f"more than {cap} colorings")
        else:
            super().__init__(f"{count} colorings exceed cap {cap}")
