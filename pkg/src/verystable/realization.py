"""Orthogonal (e_i-coordinate) realizations of the simple root systems.

Used as an independent cross-check of the Cartan-matrix construction: the
Cartan matrix is recomputed from inner products, the root set is regenerated
by Euclidean reflections, and every coroot is recomputed as
``2 alpha / (alpha, alpha)``.
"""
from __future__ import annotations

from fractions import Fraction
from typing import TYPE_CHECKING

if TYPE_CHECKING:
    from .rootsys import RootSystem, SimpleType

Vec = tuple[Fraction, ...]

_H = Fraction(1, 2)


def _e(n: int, i: int, s: int = 1) -> list[Fraction]:
    v = [Fraction(0)] * n
    v[i] = Fraction(s)
    return v


def _add(*vs: list[Fraction]) -> Vec:
    return tuple(sum(c) for c in zip(*vs))


def simple_vectors(t: SimpleType) -> list[Vec]:
    n, fam = t.rank, t.family
    if fam == "A":
        m = n + 1
        return [_add(_e(m, i), _e(m, i + 1, -1)) for i in range(n)]
    if fam in "BCD":
        chain = [_add(_e(n, i), _e(n, i + 1, -1)) for i in range(n - 1)]
        if fam == "B":
            return chain + [tuple(_e(n, n - 1))]
        if fam == "C":
            return chain + [tuple(_e(n, n - 1, 2))]
        return chain + [_add(_e(n, n - 2), _e(n, n - 1))]
    if fam == "G":
        return [_add(_e(3, 0), _e(3, 1, -1)), _add(_e(3, 0, -2), _e(3, 1), _e(3, 2))]
    if fam == "F":
        return [
            (_H, -_H, -_H, -_H),
            tuple(_e(4, 3)),
            _add(_e(4, 2), _e(4, 3, -1)),
            _add(_e(4, 1), _e(4, 2, -1)),
        ]
    if fam == "E":
        e8 = [
            (_H, -_H, -_H, -_H, -_H, -_H, -_H, _H),
            _add(_e(8, 0), _e(8, 1)),
        ] + [_add(_e(8, k), _e(8, k - 1, -1)) for k in range(1, 7)]
        return e8[:n]
    raise AssertionError(t)


def dot(x: Vec, y: Vec) -> Fraction:
    return sum((a * b for a, b in zip(x, y)), Fraction(0))


def cartan_from_vectors(simple: list[Vec]) -> tuple[tuple[int, ...], ...]:
    out = []
    for a in simple:
        row = []
        for b in simple:
            v = 2 * dot(a, b) / dot(b, b)
            assert v.denominator == 1
            row.append(int(v))
        out.append(tuple(row))
    return tuple(out)


def euclidean_roots(simple: list[Vec]) -> set[Vec]:
    roots = set(simple) | {tuple(-x for x in s) for s in simple}
    frontier = list(roots)
    while frontier:
        nxt = []
        for b in frontier:
            for a in simple:
                k = 2 * dot(b, a) / dot(a, a)
                r = tuple(x - k * y for x, y in zip(b, a))
                if r not in roots:
                    roots.add(r)
                    nxt.append(r)
        frontier = nxt
    return roots


def verify_realization(rs: RootSystem) -> None:
    """Raise ``AssertionError`` if ``rs`` disagrees with the Euclidean model."""
    for t, sl in rs.factor_slices():
        simple = simple_vectors(t)
        block = tuple(row[sl] for row in rs.cartan[sl])
        if cartan_from_vectors(simple) != block:
            raise AssertionError(f"Cartan matrix of {t} disagrees with its realization")
        eucl = euclidean_roots(simple)
        mine = [r for r in rs.roots if any(r.simple_coords[sl])]
        if len(mine) != len(eucl):
            raise AssertionError(f"{t}: {len(mine)} roots vs {len(eucl)} in realization")
        for r in mine:
            v = _add(*[[c * x for x in s] for c, s in zip(r.simple_coords[sl], simple)])
            if v not in eucl:
                raise AssertionError(f"{t}: {r.simple_coords} is not a root of the realization")
            nn = dot(v, v)
            co = tuple(2 * dot(a, v) / nn for a in simple)
            if co != tuple(Fraction(c) for c in r.coroot_coords[sl]):
                raise AssertionError(f"{t}: coroot of {r.simple_coords} mismatch")
