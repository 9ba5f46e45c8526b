"""Virtual equivariant multiplicities of Borel-type fixed points.

With ``c_j`` the number of roots of height ``j`` and
``S_j(mu) = sum_{ht(alpha) = j} <alpha, mu>``, the degrees of the graded
pieces of the adjoint bundle are

    d_j(mu) = j * c_j * (2g - 2) - S_j(mu),      d_0 = 0,

and the weight-``j`` part of the positive tangent space has dimension

    dim T_j = d_{j-1} - d_j + (c_{j-1} + c_j)(g - 1),     c_0 = rank.

The multiplicity is ``prod_j (1 - t^j)^{-dim T_j}`` divided by the Hitchin
base character ``prod_i (1 - t^{e_i + 1})^{-(2 e_i + 1)(g - 1)}``.  The sign
convention is pinned by ``m = 1`` at ``mu = 0`` and ``m = 1 + ... + t^{2n-1}``
for ``omega_1^vee`` in type ``B_n``.
"""
from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Iterable

from .grading import GradingProfile, grading_profile
from .polyfactor import (
    FactoredProduct,
    IntPoly,
    NotPolynomial,
    has_nonnegative_coefficients,
    is_monic_leading_and_constant_one,
    is_palindromic,
    rational_equal,
    rational_equals_poly,
    to_polynomial,
)
from .rootsys import (
    Coweight,
    NotDominantError,
    RootSystem,
    SimpleType,
    as_coweight,
    is_dominant,
    minuscule_fundamentals,
    pairing,
)


class NegativeDimensionError(ValueError):
    """A tangent weight space came out with negative dimension.

    The coweight is too large for the genus: no fixed point of Borel type
    with that multiplicity exists.
    """


@dataclass(frozen=True)
class TangentWeightProfile:
    genus: int
    total_mu: Coweight
    dims: dict[int, int]
    degrees: dict[int, int]


def _prepare(rs: RootSystem, mu, genus: int, gp: GradingProfile | None):
    mu = as_coweight(mu)
    if mu.rank != rs.rank:
        raise ValueError(f"coweight {mu} has rank {mu.rank}, {rs.name} has rank {rs.rank}")
    if not is_dominant(mu):
        raise NotDominantError(f"coweight {mu} is not dominant")
    if genus < 2:
        raise ValueError(f"genus must be >= 2, got {genus}")
    return mu, gp if gp is not None else grading_profile(rs)


def height_sums(rs: RootSystem, mu: Coweight) -> dict[int, int]:
    """``S_j(mu)`` for every positive height ``j``."""
    out: dict[int, int] = {}
    for r in rs.positive_roots:
        out[r.height] = out.get(r.height, 0) + pairing(r, mu)
    return out


def degree_profile(
    rs: RootSystem, mu: Coweight | Iterable[int], genus: int, gp: GradingProfile | None = None
) -> dict[int, int]:
    mu, gp = _prepare(rs, mu, genus, gp)
    s = height_sums(rs, mu)
    degs = {0: 0}
    for j in range(1, gp.coxeter + 1):
        degs[j] = j * gp.count(j) * (2 * genus - 2) - s.get(j, 0)
    return degs


def tangent_weights(
    rs: RootSystem, mu: Coweight | Iterable[int], genus: int, gp: GradingProfile | None = None
) -> TangentWeightProfile:
    mu, gp = _prepare(rs, mu, genus, gp)
    d = degree_profile(rs, mu, genus, gp)
    dims = {}
    for j in range(1, gp.coxeter + 1):
        dims[j] = d[j - 1] - d[j] + (gp.count(j - 1) + gp.count(j)) * (genus - 1)
    neg = {j: v for j, v in dims.items() if v < 0}
    if neg:
        raise NegativeDimensionError(
            f"{rs.name}, mu={mu}, g={genus}: negative tangent weight dimensions {neg}"
        )
    return TangentWeightProfile(genus=genus, total_mu=mu, dims=dims, degrees=d)


def hitchin_base_factors(gp: GradingProfile, genus: int) -> FactoredProduct:
    """``chi(Sym A^*)`` in factored form."""
    out: dict[int, int] = {}
    for e in gp.exponents:
        out[e + 1] = out.get(e + 1, 0) - (2 * e + 1) * (genus - 1)
    return FactoredProduct(out)


def virtual_multiplicity(
    rs: RootSystem, mu: Coweight | Iterable[int], genus: int = 2, gp: GradingProfile | None = None
) -> FactoredProduct:
    """``m(t)`` for a fixed point whose multiplicity coweights sum to ``mu``."""
    mu, gp = _prepare(rs, mu, genus, gp)
    tw = tangent_weights(rs, mu, genus, gp)
    numerator = FactoredProduct({j: -v for j, v in tw.dims.items()})
    return numerator / hitchin_base_factors(gp, genus)


def rho_vee(rs: RootSystem) -> Coweight:
    """Half the sum of the positive coroots."""
    total = [0] * rs.rank
    for r in rs.positive_roots:
        for k, c in enumerate(r.coroot_coords):
            total[k] += c
    if any(x % 2 for x in total):
        raise AssertionError(f"half-sum of positive coroots is not integral: {total}")
    return Coweight(tuple(x // 2 for x in total))


def dynkin_polynomial(rs: RootSystem, mu: Coweight | Iterable[int]) -> FactoredProduct:
    mu = as_coweight(mu)
    if not is_dominant(mu):
        raise NotDominantError(f"coweight {mu} is not dominant")
    rho = rho_vee(rs)
    out: dict[int, int] = {}
    for r in rs.positive_roots:
        top = pairing(r, rho + mu)
        bottom = pairing(r, rho)
        out[top] = out.get(top, 0) + 1
        out[bottom] = out.get(bottom, 0) - 1
    return FactoredProduct(out)


def weyl_dimension(rs: RootSystem, mu: Coweight | Iterable[int]) -> int:
    mu = as_coweight(mu)
    if not is_dominant(mu):
        raise NotDominantError(f"coweight {mu} is not dominant")
    rho = rho_vee(rs)
    val = Fraction(1)
    for r in rs.positive_roots:
        val *= Fraction(pairing(r, rho + mu), pairing(r, rho))
    assert val.denominator == 1
    return int(val)


# Closed forms of the published table of minuscule multiplicities, transcribed
# as printed (the type A row is read with n = rank + 1).


def _q_binomial(n: int, k: int) -> IntPoly:
    if k < 0 or k > n:
        return IntPoly()
    if k == 0 or k == n:
        return IntPoly.one()
    return _q_binomial(n - 1, k - 1) + IntPoly.monomial(k) * _q_binomial(n - 1, k)


def _one_plus(k: int) -> IntPoly:
    return IntPoly.one() + IntPoly.monomial(k)


def _prod_one_plus(n: int) -> IntPoly:
    p = IntPoly.one()
    for j in range(1, n + 1):
        p = p * _one_plus(j)
    return p


def table1_closed_form(t: SimpleType, i: int) -> IntPoly | None:
    """Printed table entry for ``omega_i^vee`` of simple type ``t``, or
    ``None`` when the table has no such row."""
    n, fam = t.rank, t.family
    if fam == "A":
        return _q_binomial(n + 1, i)
    if fam == "B" and i == 1:
        return IntPoly.geometric(2 * n)
    if fam == "C" and i == n:
        return _prod_one_plus(n)
    if fam == "D" and i == 1:
        return _one_plus(n - 1) * IntPoly.geometric(n)
    if fam == "D" and i in (n - 1, n):
        return _prod_one_plus(n)
    if fam == "E" and n == 6 and i in (1, 6):
        return (IntPoly.one() + IntPoly.monomial(4) + IntPoly.monomial(8)) * IntPoly.geometric(9)
    if fam == "E" and n == 7 and i == 7:
        return _one_plus(5) * _one_plus(9) * IntPoly.geometric(14)
    return None



def _covered(t: SimpleType) -> bool:
    return t.family in "ABCD" or str(t) in ("E6", "E7")


def multiplicity_report(
    rs: RootSystem, mu: Coweight | Iterable[int], genera: Iterable[int] = (2,)
) -> dict:
    """JSON-ready summary of ``m(t)`` for one coweight at several genera."""
    mu = as_coweight(mu)
    genera = list(genera)
    ms = [virtual_multiplicity(rs, mu, g) for g in genera]
    m = ms[0]
    poly = to_polynomial(m)
    dyn = dynkin_polynomial(rs, mu)
    row = {
        "type": rs.name,
        "coweight": list(mu.coords),
        "genus_list": genera,
        "factored": m.render(),
        "genus_independent": all(rational_equal(m, other) for other in ms[1:]),
        "matches_dynkin": all(rational_equal(x, dyn) for x in ms),
    }
    if isinstance(poly, NotPolynomial):
        row["polynomial_coeffs"] = "not_polynomial"
        row["remainder_degree"] = poly.remainder_degree
    else:
        row["polynomial_coeffs"] = list(poly.coeffs)
        row["palindromic"] = is_palindromic(poly)
        row["monic_constant_one"] = is_monic_leading_and_constant_one(poly)
        row["nonnegative"] = has_nonnegative_coefficients(poly)
        row["value_at_one"] = poly(1)
    return row


def table1(rs: RootSystem, genera: Iterable[int] = (2, 3)) -> list[dict]:
    """Recompute every minuscule fundamental row of the table for ``rs``."""
    if not rs.is_simple or not _covered(rs.types[0]):
        raise ValueError(f"type {rs.name} is not covered by the table")
    t = rs.types[0]
    genera = list(genera)
    rows = []
    for i in sorted(minuscule_fundamentals(rs)):
        expected = table1_closed_form(t, i)
        if expected is None:
            continue
        mu = rs.fundamental(i)
        row = multiplicity_report(rs, mu, genera)
        row["index"] = i
        row["table1_coeffs"] = list(expected.coeffs)
        row["matches_table1"] = all(
            rational_equals_poly(virtual_multiplicity(rs, mu, g), expected) for g in genera
        )
        rows.append(row)
    return rows
