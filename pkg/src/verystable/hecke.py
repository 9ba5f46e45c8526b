"""Very-stability of Borel-type fixed points from their multiplicity divisors.

A point of the curve is an opaque label; all that matters is the coweight
``mu_c = sum_i a_i^c omega_i^vee`` built from the vanishing orders of the
Higgs field components at that point.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from functools import lru_cache
from typing import Iterable, Mapping

from .rootsys import (
    Coweight,
    NotDominantError,
    Root,
    RootSystem,
    as_coweight,
    highest_root,
    is_dominant,
    is_minuscule,
    minuscule_fundamentals,
    pairing,
    root_string_reach,
)


class HeckePreconditionError(ValueError):
    """Inputs violate a precondition of a Hecke transformation statement."""


@dataclass(frozen=True)
class MultiplicityDivisor:
    entries: Mapping[str, Coweight] = field(default_factory=dict)

    def __post_init__(self) -> None:
        clean = {}
        for label, cw in self.entries.items():
            cw = as_coweight(cw)
            if not is_dominant(cw):
                raise NotDominantError(f"multiplicity vector at {label!r} has a negative entry: {cw}")
            if any(cw.coords):
                clean[str(label)] = cw
        ranks = {cw.rank for cw in clean.values()}
        if len(ranks) > 1:
            raise ValueError(f"inconsistent ranks in divisor: {sorted(ranks)}")
        object.__setattr__(self, "entries", clean)

    @classmethod
    def parse(cls, text: str) -> MultiplicityDivisor:
        """Parse ``"c1:1,0,0;c2:0,2,0"``; the empty string is the zero divisor."""
        entries: dict[str, Coweight] = {}
        for chunk in text.split(";"):
            chunk = chunk.strip()
            if not chunk:
                continue
            label, sep, coords = chunk.partition(":")
            label = label.strip()
            if not sep or not label:
                raise ValueError(f"malformed divisor entry {chunk!r}")
            if label in entries:
                raise ValueError(f"duplicate point label {label!r}")
            try:
                entries[label] = Coweight(tuple(int(x) for x in coords.split(",")))
            except ValueError:
                raise ValueError(f"malformed coordinates in {chunk!r}") from None
        return cls(entries)

    def serialize(self) -> str:
        return ";".join(f"{k}:{v}" for k, v in self.entries.items())

    def total(self, rank: int) -> Coweight:
        acc = Coweight.zero(rank)
        for cw in self.entries.values():
            acc = acc + cw
        return acc

    def __len__(self) -> int:
        return len(self.entries)


@dataclass(frozen=True)
class Witness:
    point: str
    coroot: Coweight
    root: Root


@dataclass(frozen=True)
class Verdict:
    very_stable: bool
    witnesses: tuple[Witness, ...] = ()

    def to_json(self) -> dict:
        return {
            "very_stable": self.very_stable,
            "witnesses": [
                {
                    "point": w.point,
                    "alpha_coroot_coords": list(w.coroot.coords),
                    "root_coords": list(w.root.simple_coords),
                }
                for w in self.witnesses
            ],
        }


def _check_rank(rs: RootSystem, cw: Coweight) -> None:
    if cw.rank != rs.rank:
        raise ValueError(f"coweight {cw} has rank {cw.rank}, {rs.name} has rank {rs.rank}")


def lemma_admissible(
    rs: RootSystem,
    a: Coweight | Iterable[int],
    mu: Coweight | Iterable[int],
    alpha: Root,
) -> bool:
    """Whether ``sigma_{mu, alpha}`` is an allowed Hecke transformation at a
    point with multiplicity vector ``a``.

    Holds iff ``a_i - b_i - l >= 0`` for every simple index ``i`` and every
    ``l >= 0`` with ``alpha_i + l alpha`` a root, ``b`` being the coordinates
    of ``mu``.  ``l = 0`` is always included.
    """
    a, mu = as_coweight(a), as_coweight(mu)
    _check_rank(rs, a)
    _check_rank(rs, mu)
    if alpha.height <= 0:
        raise HeckePreconditionError(f"alpha {alpha.simple_coords} is not positive")
    if pairing(alpha, mu) - 1 < 0:
        raise HeckePreconditionError(
            f"<alpha, mu> - 1 = {pairing(alpha, mu) - 1} < 0 for alpha={alpha.simple_coords}, mu={mu}"
        )
    for i in range(1, rs.rank + 1):
        # string through alpha_i is unbroken, so the largest l is the binding one
        if a[i - 1] - mu[i - 1] - root_string_reach(rs, i, alpha) < 0:
            return False
    return True


def witness_candidates(rs: RootSystem, mu: Coweight | Iterable[int]) -> list[Root]:
    """Every positive root passing the witness test, in tie-break order."""
    mu = as_coweight(mu)
    out = []
    for alpha in sorted(rs.positive_roots, key=Root.sort_key):
        if is_dominant(mu - alpha.coroot) and lemma_admissible(rs, mu, alpha.coroot, alpha):
            out.append(alpha)
    return out


def wobbly_witness(rs: RootSystem, mu: Coweight | Iterable[int]) -> tuple[Root, Coweight]:
    """Positive root ``alpha`` with ``mu - alpha^vee`` dominant and
    ``sigma_{alpha^vee, alpha}`` admissible at multiplicity ``mu``.

    Lowest height wins, then lexicographic simple-root coordinates.
    """
    mu = as_coweight(mu)
    _check_rank(rs, mu)
    if is_minuscule(rs, mu):
        raise HeckePreconditionError(f"{mu} is minuscule; there is no wobbly witness")
    return _first_witness(rs, mu)


@lru_cache(maxsize=65536)
def _first_witness(rs: RootSystem, mu: Coweight) -> tuple[Root, Coweight]:
    for alpha in sorted(rs.positive_roots, key=Root.sort_key):
        if is_dominant(mu - alpha.coroot) and lemma_admissible(rs, mu, alpha.coroot, alpha):
            return alpha, alpha.coroot
    raise RuntimeError(f"no witness found for non-minuscule {mu} in {rs.name}")


def classify(rs: RootSystem, div: MultiplicityDivisor) -> Verdict:
    witnesses = []
    for label, mu in div.entries.items():
        _check_rank(rs, mu)
        if not is_minuscule(rs, mu):
            alpha, co = wobbly_witness(rs, mu)
            witnesses.append(Witness(label, co, alpha))
    return Verdict(not witnesses, tuple(witnesses))


def hecke_shift(a: Coweight | Iterable[int], b: Coweight | Iterable[int]) -> Coweight:
    """Multiplicity vector after the Hecke transformation ``z^b``."""
    a, b = as_coweight(a), as_coweight(b)
    if a.rank != b.rank:
        raise ValueError(f"rank mismatch: {a.rank} vs {b.rank}")
    bad = [i + 1 for i, (x, y) in enumerate(zip(a, b)) if y < 0 or y > x]
    if bad:
        raise HeckePreconditionError(f"need 0 <= b_i <= a_i; fails at i={bad}")
    return a - b


def classical_weights(rs: RootSystem) -> tuple[int, ...]:
    """Weights ``w_i`` making ``sum_i w_i delta_i`` the divisor whose
    reducedness characterises very stability; these are the highest-root
    coefficients."""
    return highest_root(rs).simple_coords


def classify_classical(rs: RootSystem, orders: Mapping[str, Iterable[int]]) -> Verdict:
    """Classify from the vanishing orders of ``delta_1, ..., delta_{n-1}``
    (and ``eta`` in position ``n`` for B, C, D) by checking that the weighted
    divisor is reduced."""
    if not rs.is_simple or not rs.types[0].is_classical:
        raise ValueError(f"classical criterion needs a simple type A-D, got {rs.name}")
    w = classical_weights(rs)
    witnesses = []
    for label, ords in orders.items():
        ords = as_coweight(ords)
        _check_rank(rs, ords)
        if not is_dominant(ords):
            raise NotDominantError(f"negative vanishing order at {label!r}: {ords}")
        if sum(wi * o for wi, o in zip(w, ords)) > 1:
            alpha, co = wobbly_witness(rs, ords)
            witnesses.append(Witness(str(label), co, alpha))
    return Verdict(not witnesses, tuple(witnesses))


def component_feasible(rs: RootSystem, nu: Coweight | Iterable[int]) -> dict[int, int] | None:
    """Write ``nu`` as ``sum_k n_k omega_k^vee`` over minuscule ``k``.

    Returns ``{k: n_k}`` (1-based, zero terms dropped) or ``None``.  The
    fundamental coweights are a basis, so the decomposition is unique when it
    exists.
    """
    nu = as_coweight(nu)
    _check_rank(rs, nu)
    if not is_dominant(nu):
        raise NotDominantError(f"coweight {nu} is not dominant")
    allowed = minuscule_fundamentals(rs)
    if any(c and i + 1 not in allowed for i, c in enumerate(nu)):
        return None
    return {i + 1: c for i, c in enumerate(nu) if c}
