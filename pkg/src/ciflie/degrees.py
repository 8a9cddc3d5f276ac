"""Exact amplitude-phase membership degrees and their lattice order.

A degree is a pair (r, w) of rationals in [0, 1]: an amplitude r and a
normalized phase w, standing for the complex value r*exp(i*2*pi*w).
Degrees are compared componentwise, so the order is partial.  Sups and
infs of finite families are componentwise maxima/minima together with a
flag telling whether the bound is attained by a member of the family;
families that form a chain always attain their bounds.

Everything is a Fraction.  Floats would turn the downstream theorem
checks into tolerance games, so they are rejected at construction.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Union

RatLike = Union[Fraction, int, str]


def as_rational(value: RatLike) -> Fraction:
    """Coerce ints, 'num/den' strings and Fractions; never floats."""
    if isinstance(value, float):
        raise TypeError("degrees are exact: floats are not accepted")
    return Fraction(value)


def _unit_interval(value: RatLike, what: str) -> Fraction:
    q = as_rational(value)
    if q < 0 or q > 1:
        raise ValueError(f"{what} must lie in [0, 1], got {q}")
    return q


@dataclass(frozen=True)
class Degree:
    """Amplitude-phase pair, both components exact rationals in [0, 1]."""

    r: Fraction
    w: Fraction

    def __post_init__(self) -> None:
        object.__setattr__(self, "r", _unit_interval(self.r, "amplitude"))
        object.__setattr__(self, "w", _unit_interval(self.w, "phase"))

    def __repr__(self) -> str:
        return f"Degree({self.r}, {self.w})"


BOTTOM = Degree(Fraction(0), Fraction(0))
TOP = Degree(Fraction(1), Fraction(1))


def deg_leq(a: Degree, b: Degree) -> bool:
    """Componentwise order; a and b may be incomparable."""
    return a.r <= b.r and a.w <= b.w


def deg_meet(a: Degree, b: Degree) -> Degree:
    return Degree(min(a.r, b.r), min(a.w, b.w))


def deg_join(a: Degree, b: Degree) -> Degree:
    return Degree(max(a.r, b.r), max(a.w, b.w))


def family_sup(ds: Iterable[Degree]) -> tuple[Degree, bool]:
    """Least upper bound of a nonempty family plus attainment flag.

    The flag is True exactly when the family has a greatest element, in
    which case the returned bound is that element.
    """
    pool = list(ds)
    if not pool:
        raise ValueError("family_sup requires a nonempty family")
    bound = Degree(max(d.r for d in pool), max(d.w for d in pool))
    return bound, bound in pool


def family_inf(ds: Iterable[Degree]) -> tuple[Degree, bool]:
    """Greatest lower bound of a nonempty family plus attainment flag."""
    pool = list(ds)
    if not pool:
        raise ValueError("family_inf requires a nonempty family")
    bound = Degree(min(d.r for d in pool), min(d.w for d in pool))
    return bound, bound in pool


@dataclass(frozen=True)
class CIFDegree:
    """Paired membership/non-membership degrees.

    The amplitudes share a unit budget: mem.r + non.r <= 1.  The phases
    are not coupled.
    """

    mem: Degree
    non: Degree

    def __post_init__(self) -> None:
        if self.mem.r + self.non.r > 1:
            raise ValueError(
                "amplitude budget exceeded: "
                f"{self.mem.r} + {self.non.r} > 1"
            )

    def __repr__(self) -> str:
        return f"CIFDegree(({self.mem.r},{self.mem.w}); ({self.non.r},{self.non.w}))"


# Degree assigned to the zero vector of every CIF set, and the degree of
# a vector carrying no membership at all.
FULL = CIFDegree(TOP, BOTTOM)
EMPTY = CIFDegree(BOTTOM, TOP)


def cif_degree(mr: RatLike, mw: RatLike, nr: RatLike, nw: RatLike) -> CIFDegree:
    """Shorthand constructor used by tests, generators and the parser."""
    return CIFDegree(Degree(as_rational(mr), as_rational(mw)),
                     Degree(as_rational(nr), as_rational(nw)))
