"""Sturm sequences, real root counting and isolation, rational roots."""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from typing import Optional

from .unipoly import UniPoly, squarefree_part


@dataclass(frozen=True)
class RationalInterval:
    lo: Fraction
    hi: Fraction

    def __post_init__(self):
        object.__setattr__(self, "lo", Fraction(self.lo))
        object.__setattr__(self, "hi", Fraction(self.hi))
        if self.lo > self.hi:
            raise ValueError(f"empty interval [{self.lo}, {self.hi}]")

    @property
    def width(self) -> Fraction:
        return self.hi - self.lo

    @property
    def mid(self) -> Fraction:
        return (self.lo + self.hi) / 2

    def contains(self, x) -> bool:
        return self.lo <= x <= self.hi

    def as_json(self) -> list[str]:
        return [str(self.lo), str(self.hi)]


def sturm_sequence(u: UniPoly) -> list[UniPoly]:
    """Signed remainder sequence of the square-free part of ``u``."""
    p0 = squarefree_part(u)
    seq = [p0, p0.derivative()]
    while not seq[-1].is_zero():
        seq.append(-(seq[-2] % seq[-1]))
    seq.pop()
    return seq


def _sign(v) -> int:
    return (v > 0) - (v < 0)


def _variations(signs) -> int:
    nz = [s for s in signs if s]
    return sum(1 for a, b in zip(nz, nz[1:]) if a != b)


def _variations_at(seq: list[UniPoly], x: Fraction) -> int:
    return _variations(_sign(p(x)) for p in seq)


def _variations_at_infinity(seq: list[UniPoly], positive: bool) -> int:
    signs = []
    for p in seq:
        s = _sign(p.lc)
        if not positive and p.degree % 2:
            s = -s
        signs.append(s)
    return _variations(signs)


def cauchy_bound(u: UniPoly) -> Fraction:
    """All complex roots satisfy ``|z| < bound``."""
    lc = abs(u.lc)
    return 1 + max((abs(c) / lc for c in u.coeffs[:-1]), default=Fraction(0))


def sturm_count_real_roots(u: UniPoly, interval: Optional[RationalInterval] = None,
                           seq: Optional[list[UniPoly]] = None) -> int:
    """Number of distinct real roots, on the whole line or in a closed interval."""
    if u.is_zero():
        raise ValueError("root count of the zero polynomial")
    if u.is_constant():
        return 0
    seq = seq if seq is not None else sturm_sequence(u)
    if interval is None:
        return _variations_at_infinity(seq, False) - _variations_at_infinity(seq, True)
    lo, hi = interval.lo, interval.hi
    # V(a) - V(b) counts roots in (a, b]
    n = _variations_at(seq, lo) - _variations_at(seq, hi)
    if seq[0](lo) == 0:
        n += 1
    return n


def count_nonzero_real_roots(u: UniPoly) -> int:
    n = sturm_count_real_roots(u)
    return n - 1 if u(Fraction(0)) == 0 else n


def isolate_real_roots(u: UniPoly) -> list[RationalInterval]:
    """Disjoint isolating intervals, ordered left to right.

    Each interval holds exactly one distinct real root; endpoints are rational
    and are never roots themselves.
    """
    if u.is_zero():
        raise ValueError("root isolation of the zero polynomial")
    if u.is_constant():
        return []
    seq = sturm_sequence(u)
    sf = seq[0]
    bound = cauchy_bound(sf)
    out: list[RationalInterval] = []
    stack = [(-bound, bound)]
    while stack:
        lo, hi = stack.pop()
        n = _variations_at(seq, lo) - _variations_at(seq, hi)
        if n == 0:
            continue
        if n == 1:
            out.append(RationalInterval(lo, hi))
            continue
        mid = _split_point(sf, lo, hi)
        stack.append((lo, mid))
        stack.append((mid, hi))
    out.sort(key=lambda iv: iv.lo)
    # neighbours produced by one split share an endpoint
    for k in range(len(out) - 1):
        while out[k].hi >= out[k + 1].lo:
            out[k] = _halve(sf, out[k])
            out[k + 1] = _halve(sf, out[k + 1])
    return out


def _halve(sf: UniPoly, iv: RationalInterval) -> RationalInterval:
    mid = _split_point(sf, iv.lo, iv.hi)
    if _sign(sf(iv.lo)) != _sign(sf(mid)):
        return RationalInterval(iv.lo, mid)
    return RationalInterval(mid, iv.hi)


def _split_point(sf: UniPoly, lo: Fraction, hi: Fraction) -> Fraction:
    """A non-root rational strictly inside (lo, hi), near the midpoint."""
    width = hi - lo
    mid = (lo + hi) / 2
    k = 3
    while sf(mid) == 0:
        mid = lo + width * Fraction(k - 1, 2 * k - 1)
        k += 1
    return mid


def refine_root(u_sf: UniPoly, iv: RationalInterval) -> RationalInterval:
    """Halve an isolating interval of a square-free polynomial.

    Returns a degenerate interval when the midpoint is the root itself.
    """
    mid = iv.mid
    vm = u_sf(mid)
    if vm == 0:
        return RationalInterval(mid, mid)
    vl = u_sf(iv.lo)
    if _sign(vl) != _sign(vm):
        return RationalInterval(iv.lo, mid)
    return RationalInterval(mid, iv.hi)


def rational_roots(u: UniPoly, max_abs_int: int = 10**10) -> list[Fraction]:
    """Exact rational roots via the rational root theorem.

    Candidate enumeration is skipped (empty result) when the integer
    coefficients exceed ``max_abs_int``; callers treat that as "unknown".
    """
    if u.is_zero():
        raise ValueError("rational roots of the zero polynomial")
    roots: list[Fraction] = []
    k = u.trailing_zeros()
    if k:
        roots.append(Fraction(0))
        u = u.shift_down(k)
    if u.is_constant():
        return roots
    sf = squarefree_part(u)
    den = 1
    for c in sf.coeffs:
        den = den * c.denominator // math.gcd(den, c.denominator)
    ints = [int(c * den) for c in sf.coeffs]
    g = 0
    for c in ints:
        g = math.gcd(g, c)
    ints = [c // g for c in ints]
    a0, an = abs(ints[0]), abs(ints[-1])
    if a0 > max_abs_int or an > max_abs_int:
        return roots
    for p in _divisors(a0):
        for q in _divisors(an):
            if math.gcd(p, q) != 1:
                continue
            for r in (Fraction(p, q), Fraction(-p, q)):
                if sf(r) == 0:
                    roots.append(r)
    return sorted(set(roots))


def _divisors(n: int) -> list[int]:
    small, large = [], []
    d = 1
    while d * d <= n:
        if n % d == 0:
            small.append(d)
            if d * d != n:
                large.append(n // d)
        d += 1
    return small + large[::-1]
