"""Root systems of simple (and products of simple) types with exact arithmetic.

Conventions
-----------
Simple roots are numbered as in Knapp, *Lie Groups Beyond an Introduction*,
Appendix C (Bourbaki numbering except for F4, which is reversed):

======  ==========================================================
Type    Numbering of the simple roots
======  ==========================================================
A_n     chain 1 - 2 - ... - n
B_n     chain, alpha_n = e_n short
C_n     chain, alpha_n = 2 e_n long
D_n     alpha_{n-1} = e_{n-1} - e_n, alpha_n = e_{n-1} + e_n
E_6,7,8 1 - 3 - 4 - 5 - ..., with 2 attached to 4
F_4     alpha_1, alpha_2 short; alpha_3, alpha_4 long
G_2     alpha_1 short, alpha_2 long
======  ==========================================================

The Cartan matrix is ``A[i][j] = <alpha_i, alpha_j^vee>``.  Coweights are
stored in the fundamental-coweight basis, so the coweight coordinates of the
simple coroot ``alpha_j^vee`` are the ``j``-th column of ``A``.

Simple indices in the public API are 1-based, as in the mathematical
literature; coordinate tuples are ordinary 0-based Python tuples.
"""
from __future__ import annotations

import itertools
import re
from dataclasses import dataclass, field
from fractions import Fraction
from functools import cached_property, lru_cache
from typing import Iterable, Sequence

import numpy as np

FAMILIES = "ABCDEFG"


class NotDominantError(ValueError):
    """A coweight that must be dominant has a negative coordinate."""


_TYPE_RE = re.compile(r"^\s*([A-Ga-g])\s*(\d+)\s*$")


@dataclass(frozen=True, order=True)
class SimpleType:
    family: str
    rank: int

    def __post_init__(self) -> None:
        fam = self.family.upper()
        object.__setattr__(self, "family", fam)
        if fam not in FAMILIES:
            raise ValueError(f"unknown family {self.family!r}")
        r = self.rank
        ok = {
            "A": r >= 1,
            "B": r >= 2,
            "C": r >= 2,
            "D": r >= 4,
            "E": r in (6, 7, 8),
            "F": r == 4,
            "G": r == 2,
        }[fam]
        if not ok:
            raise ValueError(f"invalid rank {r} for family {fam}")

    def __str__(self) -> str:
        return f"{self.family}{self.rank}"

    @property
    def is_classical(self) -> bool:
        return self.family in "ABCD"


def parse_type(text: str | SimpleType | Sequence[SimpleType]) -> tuple[SimpleType, ...]:
    """Parse ``"B4"`` or ``"A2+A2"`` into a tuple of simple factors."""
    if isinstance(text, SimpleType):
        return (text,)
    if not isinstance(text, str):
        return tuple(text)
    parts = [p for p in text.split("+")]
    if not parts or any(not p.strip() for p in parts):
        raise ValueError(f"malformed type string {text!r}")
    out = []
    for p in parts:
        m = _TYPE_RE.match(p)
        if m is None:
            raise ValueError(f"malformed type string {p!r}")
        out.append(SimpleType(m.group(1), int(m.group(2))))
    return tuple(out)


def _edges(t: SimpleType) -> list[tuple[int, int, int, int]]:
    """Dynkin edges as (i, j, A_ij, A_ji), 0-based."""
    n = t.rank
    chain = [(i, i + 1, -1, -1) for i in range(n - 1)]
    if t.family == "A":
        return chain
    if t.family == "B":
        # alpha_n short: <alpha_{n-1}, alpha_n^vee> = -2
        return chain[:-1] + [(n - 2, n - 1, -2, -1)]
    if t.family == "C":
        return chain[:-1] + [(n - 2, n - 1, -1, -2)]
    if t.family == "D":
        return [(i, i + 1, -1, -1) for i in range(n - 2)] + [(n - 3, n - 1, -1, -1)]
    if t.family == "E":
        # 1-3-4-5-...-n with 2 attached to 4
        e = [(0, 2, -1, -1), (1, 3, -1, -1)]
        e += [(i, i + 1, -1, -1) for i in range(2, n - 1)]
        return e
    if t.family == "F":
        return [(0, 1, -1, -1), (1, 2, -1, -2), (2, 3, -1, -1)]
    if t.family == "G":
        return [(0, 1, -1, -3)]
    raise AssertionError(t)


def simple_cartan(t: SimpleType) -> tuple[tuple[int, ...], ...]:
    n = t.rank
    a = [[2 if i == j else 0 for j in range(n)] for i in range(n)]
    for i, j, aij, aji in _edges(t):
        a[i][j] = aij
        a[j][i] = aji
    return tuple(tuple(row) for row in a)


@dataclass(frozen=True)
class Coweight:
    """Integer vector of values ``<alpha_i, mu>`` on the simple roots."""

    coords: tuple[int, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "coords", tuple(int(c) for c in self.coords))

    @classmethod
    def zero(cls, rank: int) -> Coweight:
        return cls((0,) * rank)

    @classmethod
    def fundamental(cls, rank: int, i: int) -> Coweight:
        """``omega_i^vee`` (1-based ``i``)."""
        if not 1 <= i <= rank:
            raise IndexError(f"simple index {i} out of range 1..{rank}")
        return cls(tuple(int(k == i - 1) for k in range(rank)))

    @property
    def rank(self) -> int:
        return len(self.coords)

    def _check(self, other: Coweight) -> None:
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch: {self.rank} vs {other.rank}")

    def __add__(self, other: Coweight) -> Coweight:
        self._check(other)
        return Coweight(tuple(a + b for a, b in zip(self.coords, other.coords)))

    def __sub__(self, other: Coweight) -> Coweight:
        self._check(other)
        return Coweight(tuple(a - b for a, b in zip(self.coords, other.coords)))

    def __mul__(self, k: int) -> Coweight:
        return Coweight(tuple(k * a for a in self.coords))

    __rmul__ = __mul__

    def __neg__(self) -> Coweight:
        return Coweight(tuple(-a for a in self.coords))

    def __iter__(self):
        return iter(self.coords)

    def __len__(self) -> int:
        return len(self.coords)

    def __getitem__(self, k: int) -> int:
        return self.coords[k]

    def __str__(self) -> str:
        return ",".join(str(c) for c in self.coords)


def as_coweight(cw: Coweight | Iterable[int]) -> Coweight:
    return cw if isinstance(cw, Coweight) else Coweight(tuple(cw))


@dataclass(frozen=True)
class Root:
    simple_coords: tuple[int, ...]
    coroot_coords: tuple[int, ...]

    @property
    def height(self) -> int:
        return sum(self.simple_coords)

    @property
    def is_positive(self) -> bool:
        return self.height > 0

    @property
    def coroot(self) -> Coweight:
        return Coweight(self.coroot_coords)

    def sort_key(self) -> tuple:
        return (self.height, self.simple_coords)


@dataclass(frozen=True, eq=False)
class RootSystem:
    types: tuple[SimpleType, ...]
    cartan: tuple[tuple[int, ...], ...]
    roots: tuple[Root, ...]
    offsets: tuple[int, ...]
    _by_coords: dict = field(repr=False)
    _cartan_inv: tuple[tuple[Fraction, ...], ...] = field(repr=False)

    @property
    def rank(self) -> int:
        return len(self.cartan)

    @property
    def is_simple(self) -> bool:
        return len(self.types) == 1

    @property
    def name(self) -> str:
        return "+".join(str(t) for t in self.types)

    @cached_property
    def positive_roots(self) -> tuple[Root, ...]:
        return tuple(r for r in self.roots if r.height > 0)

    def simple_root(self, i: int) -> Root:
        return self._by_coords[tuple(int(k == i - 1) for k in range(self.rank))]

    def simple_coroot(self, i: int) -> Coweight:
        return self.simple_root(i).coroot

    def fundamental(self, i: int) -> Coweight:
        return Coweight.fundamental(self.rank, i)

    def zero(self) -> Coweight:
        return Coweight.zero(self.rank)

    def root(self, simple_coords: Iterable[int]) -> Root | None:
        return self._by_coords.get(tuple(simple_coords))

    def is_root(self, simple_coords: Iterable[int]) -> bool:
        return tuple(simple_coords) in self._by_coords

    def root_with_coroot(self, cw: Coweight | Iterable[int]) -> Root | None:
        target = tuple(as_coweight(cw).coords)
        for r in self.roots:
            if r.coroot_coords == target:
                return r
        return None

    def factor_slices(self) -> list[tuple[SimpleType, slice]]:
        return [
            (t, slice(off, off + t.rank)) for t, off in zip(self.types, self.offsets)
        ]

    def from_coroot_basis(self, x: Iterable[int]) -> Coweight:
        """Coweight ``sum_j x_j alpha_j^vee`` in fundamental-coweight coordinates."""
        x = tuple(x)
        if len(x) != self.rank:
            raise ValueError(f"rank mismatch: {len(x)} vs {self.rank}")
        return Coweight(
            tuple(sum(self.cartan[k][j] * x[j] for j in range(self.rank)) for k in range(self.rank))
        )

    def to_coroot_basis(self, cw: Coweight | Iterable[int]) -> tuple[Fraction, ...]:
        """Exact coordinates of ``cw`` in the simple-coroot basis."""
        c = as_coweight(cw)
        if c.rank != self.rank:
            raise ValueError(f"rank mismatch: {c.rank} vs {self.rank}")
        inv = self._cartan_inv
        return tuple(
            sum((inv[j][k] * c.coords[k] for k in range(self.rank)), Fraction(0))
            for j in range(self.rank)
        )


def _block_diag(blocks: Sequence[tuple[tuple[int, ...], ...]]) -> tuple[tuple[int, ...], ...]:
    n = sum(len(b) for b in blocks)
    rows = []
    off = 0
    for b in blocks:
        for row in b:
            rows.append((0,) * off + tuple(row) + (0,) * (n - off - len(row)))
        off += len(b)
    return tuple(rows)


def _invert(a: Sequence[Sequence[int]]) -> tuple[tuple[Fraction, ...], ...]:
    n = len(a)
    m = [[Fraction(x) for x in row] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(a)]
    for col in range(n):
        piv = next(r for r in range(col, n) if m[r][col] != 0)
        m[col], m[piv] = m[piv], m[col]
        p = m[col][col]
        m[col] = [x / p for x in m[col]]
        for r in range(n):
            if r != col and m[r][col] != 0:
                f = m[r][col]
                m[r] = [x - f * y for x, y in zip(m[r], m[col])]
    return tuple(tuple(row[n:]) for row in m)


def _reflection_closure(cartan: tuple[tuple[int, ...], ...]) -> list[Root]:
    n = len(cartan)
    cols = [tuple(cartan[k][j] for k in range(n)) for j in range(n)]
    seeds = [
        Root(tuple(int(k == j) for k in range(n)), cols[j]) for j in range(n)
    ]
    seen = {r.simple_coords: r for r in seeds}
    frontier = list(seeds)
    while frontier:
        nxt = []
        for beta in frontier:
            for i in range(n):
                # s_i(beta) = beta - <beta, alpha_i^vee> alpha_i
                p = sum(beta.simple_coords[j] * cartan[j][i] for j in range(n))
                coords = list(beta.simple_coords)
                coords[i] -= p
                coords = tuple(coords)
                if coords in seen:
                    continue
                # dual reflection on the coroot: beta^vee - <alpha_i, beta^vee> alpha_i^vee
                q = beta.coroot_coords[i]
                co = tuple(c - q * d for c, d in zip(beta.coroot_coords, cols[i]))
                r = Root(coords, co)
                seen[coords] = r
                nxt.append(r)
        frontier = nxt
    return list(seen.values())


@lru_cache(maxsize=None)
def _build(types: tuple[SimpleType, ...]) -> RootSystem:
    if not types:
        raise ValueError("empty type")
    cartan = _block_diag([simple_cartan(t) for t in types])
    roots = _reflection_closure(cartan)
    roots.sort(key=lambda r: (r.height < 0, abs(r.height), r.simple_coords))
    offsets = tuple(itertools.accumulate([0] + [t.rank for t in types[:-1]]))
    rs = RootSystem(
        types=types,
        cartan=cartan,
        roots=tuple(roots),
        offsets=offsets,
        _by_coords={r.simple_coords: r for r in roots},
        _cartan_inv=_invert(cartan),
    )
    from .realization import verify_realization

    verify_realization(rs)
    return rs


def build(t: str | SimpleType | Sequence[SimpleType]) -> RootSystem:
    """Build the root system of a simple type or an ordered product of them."""
    return _build(parse_type(t))


def pairing(root: Root | Iterable[int], cw: Coweight | Iterable[int]) -> int:
    """``<alpha, mu>`` for a root in simple-root coordinates."""
    a = root.simple_coords if isinstance(root, Root) else tuple(root)
    c = as_coweight(cw).coords
    if len(a) != len(c):
        raise ValueError(f"rank mismatch: {len(a)} vs {len(c)}")
    return sum(x * y for x, y in zip(a, c))


def highest_roots(rs: RootSystem) -> list[Root]:
    """Highest root of each simple factor, in factor order."""
    return list(_highest_roots(rs))


@lru_cache(maxsize=None)
def _highest_roots(rs: RootSystem) -> tuple[Root, ...]:
    out = []
    for _, sl in rs.factor_slices():
        best = max(
            (r for r in rs.positive_roots if any(r.simple_coords[sl])),
            key=Root.sort_key,
        )
        out.append(best)
    return tuple(out)


def highest_root(rs: RootSystem) -> Root:
    if not rs.is_simple:
        raise ValueError(f"{rs.name} is not simple; use highest_roots")
    return highest_roots(rs)[0]


def root_string_reach(rs: RootSystem, i: int, alpha: Root) -> int:
    """Largest ``l >= 0`` with ``alpha_i + l * alpha`` a root."""
    if alpha.height <= 0:
        raise ValueError("alpha must be a positive root")
    base = rs.simple_root(i).simple_coords
    reach = 0
    # root strings have length at most 4
    for l in range(1, 5):
        if rs.is_root(b + l * a for b, a in zip(base, alpha.simple_coords)):
            reach = l
    return reach


def is_dominant(cw: Coweight | Iterable[int]) -> bool:
    return all(c >= 0 for c in as_coweight(cw).coords)


def dominance_leq(rs: RootSystem, lo: Coweight | Iterable[int], hi: Coweight | Iterable[int]) -> bool:
    """``lo <= hi``: the difference is a nonnegative integer sum of simple coroots."""
    x = rs.to_coroot_basis(as_coweight(hi) - as_coweight(lo))
    return all(v.denominator == 1 and v >= 0 for v in x)


def is_minuscule(rs: RootSystem, cw: Coweight | Iterable[int]) -> bool:
    """Highest-root criterion: ``<theta, mu> <= 1`` on every simple factor."""
    c = as_coweight(cw)
    if not is_dominant(c):
        raise NotDominantError(f"coweight {c} is not dominant")
    if c.rank != rs.rank:
        raise ValueError(f"rank mismatch: {c.rank} vs {rs.rank}")
    return all(pairing(th, c) <= 1 for th in highest_roots(rs))


def dominant_below(rs: RootSystem, cw: Coweight | Iterable[int]) -> list[Coweight]:
    """All dominant ``lam`` with ``lam <= mu``, by exhaustive box enumeration.

    If ``lam`` is dominant then ``mu - lam = sum_j x_j alpha_j^vee`` with
    ``x <= A^{-1} mu`` (the inverse Cartan matrix is entrywise nonnegative),
    which bounds the search box.
    """
    c = as_coweight(cw)
    if not is_dominant(c):
        raise NotDominantError(f"coweight {c} is not dominant")
    bound = [int(v) for v in rs.to_coroot_basis(c)]  # floor; entries are >= 0
    a = np.array(rs.cartan, dtype=np.int64)
    mu = np.array(c.coords, dtype=np.int64)
    axes = [np.arange(b + 1, dtype=np.int64) for b in bound]
    grid = np.stack(np.meshgrid(*axes, indexing="ij"), axis=-1).reshape(-1, rs.rank)
    lam = mu[None, :] - grid @ a.T
    keep = np.all(lam >= 0, axis=1)
    return [Coweight(tuple(int(v) for v in row)) for row in lam[keep]]


def is_minuscule_bruteforce(rs: RootSystem, cw: Coweight | Iterable[int]) -> bool:
    """No strictly smaller dominant coweight exists in the coroot-lattice coset."""
    c = as_coweight(cw)
    return all(lam == c for lam in dominant_below(rs, c))


def minuscule_fundamentals(rs: RootSystem) -> set[int]:
    return {i for i in range(1, rs.rank + 1) if is_minuscule(rs, rs.fundamental(i))}
