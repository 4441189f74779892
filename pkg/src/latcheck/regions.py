"""Exact interval and region algebra on the rational line.

A ``Region`` is the canonical form of a finite union of subintervals of a
closed ambient interval: parts are sorted, pairwise disjoint and
non-adjacent, so structural equality coincides with set equality.  All
endpoints are rationals and every operation is exact; this is the layer
that makes support-inclusion questions decidable downstream.

Topology is relative to the ambient interval: a part touching an ambient
endpoint is interior there.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable, Optional, Union

RatLike = Union[Fraction, int, str]


def rat(x: RatLike) -> Fraction:
    """Coerce an int, a 'p/q' string or a Fraction to an exact Fraction."""
    if isinstance(x, Fraction):
        return x
    return Fraction(x)


def rat_str(x: RatLike) -> str:
    """Render a rational as 'p/q' (or 'p' when the denominator is 1)."""
    return str(rat(x))


@dataclass(frozen=True)
class Interval:
    """A nonempty rational interval with per-endpoint open/closed flags.

    Degenerate single points are allowed but must be closed on both sides.
    """

    lo: Fraction
    hi: Fraction
    lo_closed: bool = True
    hi_closed: bool = True

    def __post_init__(self) -> None:
        object.__setattr__(self, "lo", rat(self.lo))
        object.__setattr__(self, "hi", rat(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval: {self.lo} > {self.hi}")
        if self.lo == self.hi and not (self.lo_closed and self.hi_closed):
            raise ValueError("a degenerate interval must be closed on both sides")

    @property
    def is_point(self) -> bool:
        return self.lo == self.hi

    def contains(self, t: RatLike) -> bool:
        t = rat(t)
        if t < self.lo or t > self.hi:
            return False
        if t == self.lo and not self.lo_closed:
            return False
        if t == self.hi and not self.hi_closed:
            return False
        return True

    def intersect(self, other: "Interval") -> Optional["Interval"]:
        if self.lo > other.lo:
            lo, lc = self.lo, self.lo_closed
        elif other.lo > self.lo:
            lo, lc = other.lo, other.lo_closed
        else:
            lo, lc = self.lo, self.lo_closed and other.lo_closed
        if self.hi < other.hi:
            hi, hc = self.hi, self.hi_closed
        elif other.hi < self.hi:
            hi, hc = other.hi, other.hi_closed
        else:
            hi, hc = self.hi, self.hi_closed and other.hi_closed
        if lo > hi or (lo == hi and not (lc and hc)):
            return None
        return Interval(lo, hi, lc, hc)

    def __repr__(self) -> str:
        l = "[" if self.lo_closed else "("
        r = "]" if self.hi_closed else ")"
        return f"{l}{self.lo}, {self.hi}{r}"


def closed(lo: RatLike, hi: RatLike) -> Interval:
    return Interval(rat(lo), rat(hi), True, True)


def openiv(lo: RatLike, hi: RatLike) -> Interval:
    return Interval(rat(lo), rat(hi), False, False)


def point(t: RatLike) -> Interval:
    t = rat(t)
    return Interval(t, t, True, True)


def _sort_key(p: Interval):
    # closed starts sort before open starts at the same value
    return (p.lo, not p.lo_closed)


def _mergeable(a: Interval, b: Interval) -> bool:
    # assumes a starts no later than b (sorted order)
    if b.lo < a.hi:
        return True
    return b.lo == a.hi and (b.lo_closed or a.hi_closed)


def _merge(a: Interval, b: Interval) -> Interval:
    if a.hi > b.hi:
        hi, hc = a.hi, a.hi_closed
    elif b.hi > a.hi:
        hi, hc = b.hi, b.hi_closed
    else:
        hi, hc = a.hi, a.hi_closed or b.hi_closed
    return Interval(a.lo, hi, a.lo_closed, hc)


def _canonical(parts: Iterable[Interval]) -> tuple[Interval, ...]:
    out: list[Interval] = []
    for p in sorted(parts, key=_sort_key):
        if out and _mergeable(out[-1], p):
            out[-1] = _merge(out[-1], p)
        else:
            out.append(p)
    return tuple(out)


@dataclass(frozen=True)
class Region:
    """Canonical finite union of intervals inside a closed ambient domain."""

    domain: Interval
    parts: tuple[Interval, ...] = ()

    def __post_init__(self) -> None:
        if not (self.domain.lo_closed and self.domain.hi_closed):
            raise ValueError("ambient domain must be a closed interval")
        canon = _canonical(self.parts)
        for p in canon:
            if p.lo < self.domain.lo or p.hi > self.domain.hi:
                raise ValueError(f"part {p} outside ambient domain {self.domain}")
        object.__setattr__(self, "parts", canon)

    # -- predicates ---------------------------------------------------

    @property
    def is_empty(self) -> bool:
        return not self.parts

    def contains(self, t: RatLike) -> bool:
        t = rat(t)
        for p in self.parts:
            if p.lo > t:
                return False
            if p.contains(t):
                return True
        return False

    def _check(self, other: "Region") -> None:
        if self.domain != other.domain:
            raise ValueError(
                f"ambient domain mismatch: {self.domain} vs {other.domain}"
            )

    # -- algebra ------------------------------------------------------

    def union(self, other: "Region") -> "Region":
        self._check(other)
        return Region(self.domain, self.parts + other.parts)

    def intersect(self, other: "Region") -> "Region":
        self._check(other)
        acc = []
        for p in self.parts:
            for q in other.parts:
                r = p.intersect(q)
                if r is not None:
                    acc.append(r)
        return Region(self.domain, tuple(acc))

    def complement(self) -> "Region":
        gaps: list[Interval] = []
        cur, cur_closed = self.domain.lo, True
        for p in self.parts:
            g = _gap(cur, cur_closed, p.lo, not p.lo_closed)
            if g is not None:
                gaps.append(g)
            cur, cur_closed = p.hi, not p.hi_closed
        g = _gap(cur, cur_closed, self.domain.hi, True)
        if g is not None:
            gaps.append(g)
        return Region(self.domain, tuple(gaps))

    def minus(self, other: "Region") -> "Region":
        return self.intersect(other.complement())

    def closure(self) -> "Region":
        return Region(
            self.domain, tuple(Interval(p.lo, p.hi, True, True) for p in self.parts)
        )

    def interior(self) -> "Region":
        # relative interior: domain \ closure(domain \ self)
        return self.complement().closure().complement()

    def subset(self, other: "Region") -> bool:
        return self.intersect(other) == self

    def subset_closure(self, other: "Region") -> bool:
        return self.subset(other.closure())

    def __or__(self, other: "Region") -> "Region":
        return self.union(other)

    def __and__(self, other: "Region") -> "Region":
        return self.intersect(other)

    # -- helpers ------------------------------------------------------

    def boundary_values(self) -> list[Fraction]:
        vals = {self.domain.lo, self.domain.hi}
        for p in self.parts:
            vals.add(p.lo)
            vals.add(p.hi)
        return sorted(vals)

    def has_nondegenerate_part(self) -> bool:
        return any(not p.is_point for p in self.parts)

    def __repr__(self) -> str:
        if not self.parts:
            return f"Region(∅ in {self.domain})"
        return "Region(" + " ∪ ".join(map(repr, self.parts)) + f" in {self.domain})"


def _gap(lo: Fraction, lo_closed: bool, hi: Fraction, hi_closed: bool) -> Optional[Interval]:
    if lo > hi or (lo == hi and not (lo_closed and hi_closed)):
        return None
    return Interval(lo, hi, lo_closed, hi_closed)


def empty_region(domain: Interval) -> Region:
    return Region(domain, ())


def full_region(domain: Interval) -> Region:
    return Region(domain, (domain,))
