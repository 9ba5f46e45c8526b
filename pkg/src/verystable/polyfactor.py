"""Exact arithmetic for formal products ``prod_k (1 - t^k)^{c_k}``.

Exponents may be negative, so a :class:`FactoredProduct` represents a
rational function in ``t``.  Expansion to dense integer polynomials happens
only when a product is compared, divided or printed.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterable, Mapping


class IntPoly:
    """Dense polynomial over the integers; ``coeffs[k]`` multiplies ``t^k``."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Iterable[int] = ()) -> None:
        c = [int(x) for x in coeffs]
        while c and c[-1] == 0:
            c.pop()
        self.coeffs: tuple[int, ...] = tuple(c)

    @classmethod
    def one(cls) -> IntPoly:
        return cls((1,))

    @classmethod
    def geometric(cls, n: int) -> IntPoly:
        """``1 + t + ... + t^{n-1}``."""
        return cls((1,) * n)

    @classmethod
    def monomial(cls, k: int, c: int = 1) -> IntPoly:
        return cls((0,) * k + (c,))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            other = IntPoly((other,))
        if not isinstance(other, IntPoly):
            return NotImplemented
        return self.coeffs == other.coeffs

    def __hash__(self) -> int:
        return hash(self.coeffs)

    def __repr__(self) -> str:
        return f"IntPoly({list(self.coeffs)})"

    def __add__(self, other: IntPoly) -> IntPoly:
        n = max(len(self.coeffs), len(other.coeffs))
        a = self.coeffs + (0,) * (n - len(self.coeffs))
        b = other.coeffs + (0,) * (n - len(other.coeffs))
        return IntPoly(x + y for x, y in zip(a, b))

    def __neg__(self) -> IntPoly:
        return IntPoly(-x for x in self.coeffs)

    def __sub__(self, other: IntPoly) -> IntPoly:
        return self + (-other)

    def __mul__(self, other: IntPoly | int) -> IntPoly:
        if isinstance(other, int):
            return IntPoly(other * x for x in self.coeffs)
        if not self or not other:
            return IntPoly()
        out = [0] * (len(self.coeffs) + len(other.coeffs) - 1)
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    out[i + j] += a * b
        return IntPoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int) -> IntPoly:
        if n < 0:
            raise ValueError("negative power of a polynomial")
        result, base = IntPoly.one(), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def __divmod__(self, other: IntPoly) -> tuple[IntPoly, IntPoly]:
        if not other:
            raise ZeroDivisionError("polynomial division by zero")
        lead = other.coeffs[-1]
        rem = list(self.coeffs)
        dq = len(rem) - len(other.coeffs)
        if dq < 0:
            return IntPoly(), IntPoly(rem)
        quot = [0] * (dq + 1)
        for k in range(dq, -1, -1):
            top = rem[k + len(other.coeffs) - 1]
            if top == 0:
                continue
            q, r = divmod(top, lead)
            if r:
                # stay in Z[t]: stop with a remainder of degree >= deg(other)
                return IntPoly(quot), IntPoly(rem)
            quot[k] = q
            for j, b in enumerate(other.coeffs):
                rem[k + j] -= q * b
        return IntPoly(quot), IntPoly(rem)

    def __call__(self, x: int) -> int:
        acc = 0
        for c in reversed(self.coeffs):
            acc = acc * x + c
        return acc


def one_minus_t_pow(k: int) -> IntPoly:
    """``1 - t^k``."""
    if k <= 0:
        raise ValueError(f"factor index must be positive, got {k}")
    return IntPoly((1,) + (0,) * (k - 1) + (-1,))


@dataclass(frozen=True)
class NotPolynomial:
    """Outcome of :func:`to_polynomial` when the division leaves a remainder."""

    remainder_degree: int

    def __bool__(self) -> bool:
        return False


@dataclass(frozen=True)
class FactoredProduct:
    """``prod_k (1 - t^k)^{factors[k]}`` with zero exponents dropped."""

    factors: Mapping[int, int]

    def __post_init__(self) -> None:
        clean = {}
        for k, c in self.factors.items():
            k, c = int(k), int(c)
            if k <= 0:
                raise ValueError(f"factor index must be positive, got {k}")
            if c:
                clean[k] = c
        object.__setattr__(self, "factors", dict(sorted(clean.items())))

    @classmethod
    def unit(cls) -> FactoredProduct:
        return cls({})

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, FactoredProduct):
            return NotImplemented
        return self.factors == other.factors

    def __hash__(self) -> int:
        return hash(tuple(self.factors.items()))

    def __mul__(self, other: FactoredProduct) -> FactoredProduct:
        out = dict(self.factors)
        for k, c in other.factors.items():
            out[k] = out.get(k, 0) + c
        return FactoredProduct(out)

    def inverse(self) -> FactoredProduct:
        return FactoredProduct({k: -c for k, c in self.factors.items()})

    def __truediv__(self, other: FactoredProduct) -> FactoredProduct:
        return self * other.inverse()

    def __pow__(self, n: int) -> FactoredProduct:
        return FactoredProduct({k: n * c for k, c in self.factors.items()})

    @property
    def is_unit(self) -> bool:
        return not self.factors

    def render(self) -> str:
        """Human form, e.g. ``(1-t^2)^3 (1-t)^-1``; largest index first."""
        if not self.factors:
            return "1"
        parts = []
        for k, c in sorted(self.factors.items(), reverse=True):
            base = "(1-t)" if k == 1 else f"(1-t^{k})"
            parts.append(base if c == 1 else f"{base}^{c}")
        return " ".join(parts)

    def __str__(self) -> str:
        return self.render()


def expand(factors: Mapping[int, int]) -> IntPoly:
    """Expand ``prod_k (1 - t^k)^{c_k}`` for nonnegative ``c_k``."""
    p = IntPoly.one()
    for k, c in sorted(factors.items()):
        if c < 0:
            raise ValueError("expand() needs nonnegative exponents")
        p = p * one_minus_t_pow(k) ** c
    return p


def expand_numerator_denominator(fp: FactoredProduct) -> tuple[IntPoly, IntPoly]:
    num = expand({k: c for k, c in fp.factors.items() if c > 0})
    den = expand({k: -c for k, c in fp.factors.items() if c < 0})
    return num, den


def to_polynomial(fp: FactoredProduct) -> IntPoly | NotPolynomial:
    num, den = expand_numerator_denominator(fp)
    q, r = divmod(num, den)
    if r:
        return NotPolynomial(r.degree)
    return q


def rational_equal(a: FactoredProduct, b: FactoredProduct) -> bool:
    """Equality of rational functions by cross-multiplying expansions."""
    na, da = expand_numerator_denominator(a)
    nb, db = expand_numerator_denominator(b)
    return na * db == nb * da


def rational_equals_poly(fp: FactoredProduct, p: IntPoly) -> bool:
    num, den = expand_numerator_denominator(fp)
    return num == p * den


def is_palindromic(p: IntPoly) -> bool:
    return p.coeffs == p.coeffs[::-1]


def eval_at_one(p: IntPoly) -> int:
    return sum(p.coeffs)


def is_monic_leading_and_constant_one(p: IntPoly) -> bool:
    return bool(p) and p.coeffs[0] == 1 and p.coeffs[-1] == 1


def has_nonnegative_coefficients(p: IntPoly) -> bool:
    return all(c >= 0 for c in p.coeffs)
