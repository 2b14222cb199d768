"""Surgery coefficients, regular continued fractions and quotient sums."""

from __future__ import annotations

import math
import re
from dataclasses import dataclass
from fractions import Fraction
from typing import Iterator, Sequence

from . import kernels

__all__ = [
    "InfiniteSlopeError",
    "SurgeryCoefficient",
    "ContinuedFraction",
    "normalize",
    "expand_cf",
    "s_sum",
    "evaluate_quotients",
    "fractional_parts",
    "coefficients_with_sum_at_most",
    "parse_coefficient",
]

_NUMBER = re.compile(r"^(-?\d+)(?:/(-?\d+))?$")


class InfiniteSlopeError(ValueError):
    """Raised when the infinite coefficient 1/0 is used where p/q is required."""


@dataclass(frozen=True)
class SurgeryCoefficient:
    """A reduced non-negative rational ``p/q`` with ``q >= 1``."""

    p: int
    q: int

    def __post_init__(self):
        if self.q < 1 or self.p < 0:
            raise ValueError(f"need p >= 0 and q >= 1, got {self.p}/{self.q}")
        if math.gcd(self.p, self.q) != 1:
            raise ValueError(f"{self.p}/{self.q} is not reduced")

    @property
    def integer_part(self) -> int:
        return self.p // self.q

    @property
    def remainder(self) -> int:
        return self.p % self.q

    @property
    def is_integer(self) -> bool:
        return self.q == 1

    def as_fraction(self) -> Fraction:
        return Fraction(self.p, self.q)

    def __str__(self):
        return f"{self.p}/{self.q}"


@dataclass(frozen=True)
class ContinuedFraction:
    """Partial quotients ``[a0; a1, ..., an]`` in canonical form (``an >= 2`` if ``n >= 1``)."""

    quotients: tuple[int, ...]

    def __post_init__(self):
        qs = self.quotients
        if not qs:
            raise ValueError("a continued fraction needs at least a0")
        if qs[0] < 0 or any(a < 1 for a in qs[1:]):
            raise ValueError(f"invalid partial quotients {qs}")
        if len(qs) > 1 and qs[-1] < 2:
            raise ValueError(f"non-canonical expansion {qs}: last quotient must be >= 2")

    @property
    def total(self) -> int:
        return sum(self.quotients)

    def evaluate(self) -> Fraction:
        return evaluate_quotients(self.quotients)

    def alternate(self) -> tuple[int, ...]:
        """The other expansion of the same rational, ending in a 1."""
        qs = self.quotients
        if len(qs) == 1 and qs[0] == 0:
            return qs
        return qs[:-1] + (qs[-1] - 1, 1)

    def __str__(self):
        head, tail = self.quotients[0], self.quotients[1:]
        if not tail:
            return f"[{head}]"
        return f"[{head}; " + ", ".join(map(str, tail)) + "]"


def evaluate_quotients(quotients: Sequence[int]) -> Fraction:
    """Fold partial quotients back into a rational with exact continuants."""
    h, h_prev = 1, 0
    k, k_prev = 0, 1
    for a in quotients:
        h, h_prev = a * h + h_prev, h
        k, k_prev = a * k + k_prev, k
    return Fraction(h, k)


def normalize(p: int, q: int) -> SurgeryCoefficient:
    """Reduce ``p/q`` and apply the mirror symmetry ``-p/q ~ p/q``.

    Raises InfiniteSlopeError for ``q == 0`` and ValueError for ``(0, 0)``.
    """
    if p == 0 and q == 0:
        raise ValueError("0/0 is not a surgery coefficient")
    if q == 0:
        raise InfiniteSlopeError("infinite surgery coefficient not admitted")
    g = math.gcd(p, q)
    return SurgeryCoefficient(abs(p) // g, abs(q) // g)


def expand_cf(x: SurgeryCoefficient) -> ContinuedFraction:
    p, q = x.p, x.q
    out = []
    while q:
        out.append(p // q)
        p, q = q, p % q
    return ContinuedFraction(tuple(out))


def s_sum(x: SurgeryCoefficient) -> int:
    """Sum of all partial quotients of ``x``; zero for ``0/1``."""
    return kernels.quotient_sum(x.p, x.q)


def fractional_parts(budget: int) -> Iterator[tuple[tuple[int, ...], int, int]]:
    """Yield ``(tail, r, q)`` for every ``r/q`` in (0, 1) with quotient sum <= budget.

    ``tail`` is ``(a1, ..., an)`` with ``r/q = [0; a1, ..., an]``.  A prefix is
    only extended while a terminal quotient (>= 2) still fits, and extending
    a prefix never lowers its sum, so nothing with sum <= budget is skipped.
    """
    stack: list[tuple[tuple[int, ...], int]] = [((), budget)]
    while stack:
        prefix, left = stack.pop()
        for a in range(1, left + 1):
            tail = prefix + (a,)
            if a >= 2:
                val = evaluate_quotients((0,) + tail)
                yield tail, val.numerator, val.denominator
            if left - a >= 2:
                stack.append((tail, left - a))


def coefficients_with_sum_at_most(n: int) -> list[SurgeryCoefficient]:
    """All ``p/q >= 0`` with ``S(p, q) <= n``, sorted by value."""
    out = [SurgeryCoefficient(k, 1) for k in range(n + 1)]
    for k in range(n - 1):
        for _, r, q in fractional_parts(n - k):
            out.append(SurgeryCoefficient(k * q + r, q))
    out.sort(key=SurgeryCoefficient.as_fraction)
    return out


def parse_coefficient(text: str) -> SurgeryCoefficient:
    """Parse ``"p/q"`` or ``"p"``; ``"inf"`` is rejected as infinite."""
    s = text.strip()
    if s.lower() in ("inf", "infinity", "oo"):
        raise InfiniteSlopeError("infinite slope excluded by the theorem")
    m = _NUMBER.match(s)
    if not m:
        raise ValueError(f"cannot parse surgery coefficient {text!r}")
    p = int(m.group(1))
    q = int(m.group(2)) if m.group(2) is not None else 1
    return normalize(p, q)
