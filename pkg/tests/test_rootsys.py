import itertools
from fractions import Fraction

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from verystable.rootsys import (
    Coweight,
    NotDominantError,
    SimpleType,
    build,
    dominance_leq,
    dominant_below,
    highest_root,
    highest_roots,
    is_dominant,
    is_minuscule,
    is_minuscule_bruteforce,
    minuscule_fundamentals,
    pairing,
    parse_type,
    root_string_reach,
)

SMALL_TYPES = ["A1", "A2", "A3", "A4", "B2", "B3", "B4", "C2", "C3", "C4", "D4", "F4", "G2"]
ALL_TYPES = (
    [f"A{n}" for n in range(1, 9)]
    + [f"B{n}" for n in range(2, 9)]
    + [f"C{n}" for n in range(2, 9)]
    + [f"D{n}" for n in range(4, 9)]
    + ["E6", "E7", "E8", "F4", "G2"]
)


def test_parse_type():
    assert parse_type("B4") == (SimpleType("B", 4),)
    assert parse_type("A2+A2") == (SimpleType("A", 2), SimpleType("A", 2))
    assert parse_type("e7") == (SimpleType("E", 7),)


@pytest.mark.parametrize("bad", ["D3", "E9", "F3", "G3", "B1", "A0", "X2", "A", "A2+", ""])
def test_invalid_types_rejected(bad):
    with pytest.raises(ValueError):
        build(bad)


def test_a1_positive_roots():
    assert [r.simple_coords for r in build("A1").positive_roots] == [(1,)]


def _a2_oracle():
    # e_i - e_j in R^3, written in the basis alpha_1 = e1 - e2, alpha_2 = e2 - e3
    out = []
    for i, j in itertools.permutations(range(3), 2):
        sign = 1 if i < j else -1
        lo, hi = min(i, j), max(i, j)
        out.append(tuple(sign * int(lo <= k < hi) for k in range(2)))
    return sorted(out)


def test_a2_roots_match_orthogonal_model():
    rs = build("A2")
    assert sorted(r.simple_coords for r in rs.roots) == _a2_oracle()
    assert sorted(r.height for r in rs.positive_roots) == [1, 1, 2]


def test_g2_roots():
    rs = build("G2")
    assert len(rs.roots) == 12
    assert max(r.height for r in rs.roots) == 5
    assert highest_root(rs).simple_coords == (3, 2)


@pytest.mark.parametrize(
    "t, count",
    [("A4", 20), ("B3", 18), ("C4", 32), ("D5", 40), ("E6", 72), ("E7", 126), ("E8", 240), ("F4", 48)],
)
def test_root_counts(t, count):
    assert len(build(t).roots) == count


@pytest.mark.parametrize("t", ALL_TYPES)
def test_reflection_closure_and_cartan_duality(t):
    rs = build(t)
    n = rs.rank
    coords = {r.simple_coords for r in rs.roots}
    for r in rs.roots:
        for i in range(1, n + 1):
            p = pairing(r, rs.simple_coroot(i))
            s = tuple(c - p * int(k == i - 1) for k, c in enumerate(r.simple_coords))
            assert s in coords
        assert all(c >= 0 for c in r.simple_coords) or all(c <= 0 for c in r.simple_coords)
    assert len(rs.roots) == 2 * len(rs.positive_roots)
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            assert pairing(rs.simple_root(i), rs.fundamental(j)) == int(i == j)
            assert pairing(rs.simple_root(i), rs.simple_coroot(j)) == rs.cartan[i - 1][j - 1]


def test_pairing_examples():
    rs = build("B2")
    assert highest_root(rs).simple_coords == (1, 2)
    assert pairing(highest_root(rs), rs.fundamental(1)) == 1
    with pytest.raises(ValueError):
        pairing((1, 0), Coweight((1, 0, 0)))


@given(
    st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    st.lists(st.integers(-5, 5), min_size=3, max_size=3),
    st.integers(-4, 4),
)
def test_pairing_bilinear(a, b, c, k):
    sa = [x + y for x, y in zip(a, b)]
    assert pairing(sa, c) == pairing(a, c) + pairing(b, c)
    assert pairing(a, Coweight(tuple(b)) + Coweight(tuple(c))) == pairing(a, b) + pairing(a, c)
    assert pairing(a, k * Coweight(tuple(c))) == k * pairing(a, c)


@pytest.mark.parametrize("n", range(2, 8))
def test_highest_roots_classical(n):
    assert highest_root(build(f"A{n}")).simple_coords == (1,) * n
    assert highest_root(build(f"B{n}")).simple_coords == (1,) + (2,) * (n - 1)
    assert highest_root(build(f"C{n}")).simple_coords == (2,) * (n - 1) + (1,)


def test_highest_roots_of_product():
    rs = build("A2+B2")
    assert [r.simple_coords for r in highest_roots(rs)] == [(1, 1, 0, 0), (0, 0, 1, 2)]
    with pytest.raises(ValueError):
        highest_root(rs)


def test_root_string_reach():
    rs = build("A2")
    theta = highest_root(rs)
    assert root_string_reach(rs, 1, theta) == 0
    assert root_string_reach(rs, 2, rs.simple_root(1)) == 1
    for t in ["B3", "G2", "E6"]:
        rs = build(t)
        for i in range(1, rs.rank + 1):
            assert root_string_reach(rs, i, rs.simple_root(i)) == 0


def test_root_string_reach_g2_long_string():
    rs = build("G2")
    # alpha_2 + l alpha_1 is a root for l = 0..3
    assert root_string_reach(rs, 2, rs.simple_root(1)) == 3


def test_is_dominant():
    assert is_dominant((0, 0))
    assert is_dominant(build("A3").fundamental(2))
    assert not is_dominant(build("A2").simple_coroot(1))
    assert build("A2").simple_coroot(1).coords == (2, -1)


def test_dominance_leq_examples():
    rs = build("A2")
    mu = Coweight((1, 1))
    assert dominance_leq(rs, mu, mu)
    for r in rs.positive_roots:
        assert dominance_leq(rs, rs.zero(), r.coroot)
    assert not dominance_leq(rs, rs.zero(), rs.fundamental(1))
    assert rs.to_coroot_basis(rs.fundamental(1)) == (Fraction(2, 3), Fraction(1, 3))


def _dominant_box(rank, top):
    return [Coweight(c) for c in itertools.product(range(top + 1), repeat=rank)]


@pytest.mark.parametrize("t", ["A2", "B2", "G2", "A3", "C3"])
def test_dominance_is_partial_order(t):
    rs = build(t)
    pts = _dominant_box(rs.rank, 2)
    leq = {(a, b): dominance_leq(rs, a, b) for a in pts for b in pts}
    for a in pts:
        assert leq[a, a]
    for a, b in itertools.product(pts, repeat=2):
        if a != b and leq[a, b]:
            assert not leq[b, a]
    for a, b, c in itertools.product(pts, repeat=3):
        if leq[a, b] and leq[b, c]:
            assert leq[a, c]


def test_is_minuscule_examples():
    for n in range(2, 7):
        rs = build(f"B{n}")
        assert is_minuscule(rs, rs.fundamental(1))
    rs = build("G2")
    assert not is_minuscule(rs, rs.fundamental(1))
    assert is_minuscule(rs, rs.zero())
    with pytest.raises(NotDominantError):
        is_minuscule(build("A2"), (2, -1))


@pytest.mark.parametrize("t", SMALL_TYPES + ["A1+A1", "A2+B2"])
def test_minuscule_fast_path_matches_bruteforce(t):
    rs = build(t)
    for mu in _dominant_box(rs.rank, 2):
        assert is_minuscule(rs, mu) == is_minuscule_bruteforce(rs, mu), mu


def test_dominant_below_contains_self_and_zero_in_root_coset():
    rs = build("B3")
    mu = rs.fundamental(2)
    below = dominant_below(rs, mu)
    assert mu in below
    assert rs.zero() in below  # omega_2^vee is a coroot of B3


def test_minuscule_fundamentals():
    for n in range(1, 8):
        assert minuscule_fundamentals(build(f"A{n}")) == set(range(1, n + 1))
    for n in range(4, 8):
        assert minuscule_fundamentals(build(f"D{n}")) == {1, n - 1, n}
    for n in range(2, 8):
        assert minuscule_fundamentals(build(f"B{n}")) == {1}
        assert minuscule_fundamentals(build(f"C{n}")) == {n}
    assert minuscule_fundamentals(build("E6")) == {1, 6}
    assert minuscule_fundamentals(build("E7")) == {7}
    for t in ["E8", "F4", "G2"]:
        assert minuscule_fundamentals(build(t)) == set()


@settings(max_examples=50, deadline=None)
@given(st.sampled_from(["A3", "B3", "C3", "D4"]), st.data())
def test_coroot_basis_round_trip(t, data):
    rs = build(t)
    x = data.draw(st.lists(st.integers(-4, 4), min_size=rs.rank, max_size=rs.rank))
    assert rs.to_coroot_basis(rs.from_coroot_basis(x)) == tuple(Fraction(v) for v in x)
