"""Borel grading of a Lie algebra by root height."""
from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .rootsys import Coweight, RootSystem


@dataclass(frozen=True)
class GradingProfile:
    rank: int
    counts_by_height: dict[int, int]
    exponents: tuple[int, ...]
    coxeter: int

    def count(self, h: int) -> int:
        """``dim g_h``; the Cartan piece has dimension ``rank``."""
        if h == 0:
            return self.rank
        return self.counts_by_height.get(h, 0)

    @property
    def max_height(self) -> int:
        return max(self.counts_by_height)


def conjugate_partition(counts: dict[int, int]) -> list[int]:
    """Exponents ``e`` with ``counts[k] = #{i : e_i >= k}``, sorted ascending."""
    positive = [counts.get(k, 0) for k in range(1, max(counts, default=0) + 1)]
    if any(a < b for a, b in zip(positive, positive[1:])):
        raise ValueError("height counts are not weakly decreasing")
    exps = []
    for k, c in enumerate(positive, start=1):
        nxt = positive[k] if k < len(positive) else 0
        exps += [k] * (c - nxt)
    return sorted(exps)


def grading_profile(rs: RootSystem) -> GradingProfile:
    counts = dict(sorted(Counter(r.height for r in rs.roots).items()))
    exps = conjugate_partition({h: c for h, c in counts.items() if h > 0})
    top = max(counts)
    return GradingProfile(rank=rs.rank, counts_by_height=counts, exponents=tuple(exps), coxeter=top + 1)


def grading_element(rs: RootSystem) -> Coweight:
    """``zeta = sum_j omega_j^vee``, i.e. ``rho^vee``."""
    return Coweight((1,) * rs.rank)


def mu_can(rs: RootSystem, genus: int) -> Coweight:
    """Topological type of the canonical uniformising Higgs bundle."""
    if genus < 2:
        raise ValueError(f"genus must be >= 2, got {genus}")
    return Coweight((2 * genus - 2,) * rs.rank)
