"""Dense univariate polynomials over the rationals.

Coefficients are stored lowest degree first with trailing zeros stripped, so
the zero polynomial is the empty tuple and ``degree`` is -1 for it.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Sequence


def _frac(c) -> Fraction:
    if isinstance(c, Fraction):
        return c
    if isinstance(c, float):
        raise TypeError("float coefficients are not allowed; use Fraction")
    return Fraction(c)


def _strip(coeffs: Sequence[Fraction]) -> tuple[Fraction, ...]:
    n = len(coeffs)
    while n and coeffs[n - 1] == 0:
        n -= 1
    return tuple(coeffs[:n])


class UniPoly:
    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable = ()):
        object.__setattr__(self, "coeffs", _strip([_frac(c) for c in coeffs]))

    def __setattr__(self, name, value):
        raise AttributeError("UniPoly is immutable")

    @classmethod
    def _raw(cls, coeffs: tuple[Fraction, ...]) -> "UniPoly":
        obj = object.__new__(cls)
        object.__setattr__(obj, "coeffs", _strip(coeffs))
        return obj

    @classmethod
    def constant(cls, c) -> "UniPoly":
        return cls([c])

    @classmethod
    def t(cls) -> "UniPoly":
        return cls([0, 1])

    @classmethod
    def from_roots(cls, roots: Iterable, lead=1) -> "UniPoly":
        p = cls([lead])
        for r in roots:
            p = p * cls([-_frac(r), 1])
        return p

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def is_zero(self) -> bool:
        return not self.coeffs

    def is_constant(self) -> bool:
        return len(self.coeffs) <= 1

    @property
    def lc(self) -> Fraction:
        return self.coeffs[-1] if self.coeffs else Fraction(0)

    def coeff(self, k: int) -> Fraction:
        return self.coeffs[k] if 0 <= k < len(self.coeffs) else Fraction(0)

    def __eq__(self, other):
        if isinstance(other, UniPoly):
            return self.coeffs == other.coeffs
        if isinstance(other, (int, Fraction)):
            return self.coeffs == _strip([_frac(other)])
        return NotImplemented

    def __hash__(self):
        return hash(("UniPoly", self.coeffs))

    def __repr__(self):
        return f"UniPoly({[str(c) for c in self.coeffs]})"

    def __str__(self):
        return format_unipoly(self)

    def _coerce(self, other) -> "UniPoly":
        if isinstance(other, UniPoly):
            return other
        return UniPoly([other])

    def __add__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if len(a) < len(b):
            a, b = b, a
        out = list(a)
        for k, c in enumerate(b):
            out[k] += c
        return UniPoly._raw(tuple(out))

    __radd__ = __add__

    def __neg__(self):
        return UniPoly._raw(tuple(-c for c in self.coeffs))

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        a, b = self.coeffs, other.coeffs
        if not a or not b:
            return UniPoly._raw(())
        out = [Fraction(0)] * (len(a) + len(b) - 1)
        for i, ca in enumerate(a):
            if ca == 0:
                continue
            for j, cb in enumerate(b):
                out[i + j] += ca * cb
        return UniPoly._raw(tuple(out))

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result = UniPoly([1])
        base = self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other):
        other = self._coerce(other)
        if other.is_zero():
            raise ZeroDivisionError("division by zero polynomial")
        rem = list(self.coeffs)
        db = other.degree
        lb = other.lc
        if len(rem) - 1 < db:
            return UniPoly._raw(()), self
        quot = [Fraction(0)] * (len(rem) - db)
        for k in range(len(rem) - 1, db - 1, -1):
            c = rem[k]
            if c == 0:
                continue
            q = c / lb
            quot[k - db] = q
            for j, cb in enumerate(other.coeffs):
                rem[k - db + j] -= q * cb
        return UniPoly._raw(tuple(quot)), UniPoly._raw(tuple(rem[:db]))

    def __floordiv__(self, other):
        return divmod(self, other)[0]

    def __mod__(self, other):
        return divmod(self, other)[1]

    def __call__(self, x):
        acc = Fraction(0) if not isinstance(x, float) else 0.0
        for c in reversed(self.coeffs):
            acc = acc * x + (c if not isinstance(x, float) else float(c))
        return acc

    def derivative(self) -> "UniPoly":
        return UniPoly._raw(tuple(k * c for k, c in enumerate(self.coeffs) if k))

    def monic(self) -> "UniPoly":
        if self.is_zero():
            return self
        lc = self.lc
        return UniPoly._raw(tuple(c / lc for c in self.coeffs))

    def compose(self, other: "UniPoly") -> "UniPoly":
        acc = UniPoly._raw(())
        for c in reversed(self.coeffs):
            acc = acc * other + c
        return acc

    def reversed(self) -> "UniPoly":
        """Coefficient reversal ``t^deg * p(1/t)``."""
        return UniPoly._raw(tuple(reversed(self.coeffs)))

    def trailing_zeros(self) -> int:
        for k, c in enumerate(self.coeffs):
            if c != 0:
                return k
        return 0

    def shift_down(self, k: int) -> "UniPoly":
        """Divide by ``t^k``; the low coefficients must be zero."""
        if any(c != 0 for c in self.coeffs[:k]):
            raise ValueError("polynomial not divisible by t^k")
        return UniPoly._raw(self.coeffs[k:])


def format_unipoly(p: UniPoly, var: str = "t") -> str:
    if p.is_zero():
        return "0"
    parts = []
    for k in range(p.degree, -1, -1):
        c = p.coeffs[k]
        if c == 0:
            continue
        sign = "-" if c < 0 else "+"
        a = -c if c < 0 else c
        if k == 0:
            body = str(a)
        else:
            mono = var if k == 1 else f"{var}^{k}"
            body = mono if a == 1 else f"{a}*{mono}"
        parts.append((sign, body))
    first_sign, first = parts[0]
    out = ("-" if first_sign == "-" else "") + first
    for sign, body in parts[1:]:
        out += f" {sign} {body}"
    return out


def uni_gcd(u: UniPoly, v: UniPoly) -> UniPoly:
    """Monic gcd; zero only when both inputs are zero."""
    a, b = u, v
    while not b.is_zero():
        a, b = b, a % b
    return a.monic()


def squarefree_part(u: UniPoly) -> UniPoly:
    if u.is_zero():
        raise ValueError("zero polynomial has no square-free part")
    if u.is_constant():
        return UniPoly([1])
    return (u // uni_gcd(u, u.derivative())).monic()


def squarefree_decomposition(u: UniPoly) -> list[tuple[UniPoly, int]]:
    """Yun's algorithm.

    Returns monic, square-free, pairwise coprime factors with multiplicities so
    that ``u == u.lc * prod(f**m)``.  Factors are listed by increasing
    multiplicity; constant factors are omitted.
    """
    if u.is_zero():
        raise ValueError("square-free decomposition of the zero polynomial")
    f = u.monic()
    if f.is_constant():
        return []
    out = []
    fp = f.derivative()
    a = uni_gcd(f, fp)
    b = f // a
    c = fp // a
    d = c - b.derivative()
    k = 1
    while not b.is_constant():
        g = uni_gcd(b, d)
        if not g.is_constant():
            out.append((g, k))
        b = b // g
        c = d // g
        d = c - b.derivative()
        k += 1
    return out


def uni_resultant(a: UniPoly, b: UniPoly) -> Fraction:
    """Standard resultant ``lc(a)^n lc(b)^m prod(alpha_i - beta_j)`` via Euclid."""
    if a.is_zero() or b.is_zero():
        return Fraction(0)
    m, n = a.degree, b.degree
    if m == 0:
        return a.lc ** n
    if n == 0:
        return b.lc ** m
    r = a % b
    if r.is_zero():
        return Fraction(0)
    sign = -1 if (m * n) % 2 else 1
    return sign * b.lc ** (m - r.degree) * uni_resultant(b, r)


def interpolate(xs: Sequence[Fraction], ys: Sequence[Fraction]) -> UniPoly:
    """Newton divided-difference interpolation through the given nodes."""
    n = len(xs)
    coef = [Fraction(y) for y in ys]
    for j in range(1, n):
        for i in range(n - 1, j - 1, -1):
            coef[i] = (coef[i] - coef[i - 1]) / (xs[i] - xs[i - j])
    p = UniPoly([coef[-1]])
    for i in range(n - 2, -1, -1):
        p = p * UniPoly([-xs[i], 1]) + coef[i]
    return p
