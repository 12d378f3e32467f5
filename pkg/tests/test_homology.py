"""Tests for chain complexes, homology, fibers and tensor products."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thrcalc.dihedral import circle_model, dihedral_nerve_piece, fixed_subset, sd_sigma
from thrcalc.errors import SpecError
from thrcalc.fgab import Mat, group, free_group
from thrcalc.homology import (
    ChainComplex,
    chain_complex,
    chain_map,
    connecting_hom,
    direct_sum,
    fiber_les_report,
    fiber_map,
    full_chains,
    homology,
    homology_range,
    identity_chain_map,
    induced_hom,
    is_acyclic,
    mapping_cone,
    mapping_fiber,
    normalized_chains,
    shift,
    simplicial_homology,
    tensor_chain_map,
    tensor_complex,
    zero_complex,
)
from thrcalc.involutive_algebra import monoid_nat

Z = free_group(1)


def mult_complex(n):
    """Z --n--> Z in degrees 1, 0."""
    return chain_complex({0: 1, 1: 1}, {1: [[n]]})


# ---------------------------------------------------------------------------
# construction and basic homology
# ---------------------------------------------------------------------------


def test_d_squared_is_checked():
    with pytest.raises(SpecError):
        chain_complex({0: 1, 1: 1, 2: 1}, {1: [[1]], 2: [[1]]})


def test_shape_mismatch_is_checked():
    with pytest.raises(SpecError):
        chain_complex({0: 2, 1: 1}, {1: [[1]]})


def test_moore_complex_homology():
    c = mult_complex(2)
    assert homology(c, 0) == group(1, [[2]])
    assert homology(c, 1).is_trivial()
    assert homology(c, 5).is_trivial()


def test_zero_differential_gives_free_homology():
    c = chain_complex({0: 2, 1: 1}, {})
    assert homology(c, 0) == free_group(2)
    assert homology(c, 1) == Z


def test_euler_characteristic():
    c = chain_complex({0: 3, 1: 2, 2: 4}, {})
    assert c.euler_characteristic() == 3 - 2 + 4
    assert zero_complex().euler_characteristic() == 0


def test_homology_in_negative_degrees():
    c = chain_complex({-2: 1, -3: 1}, {-2: [[3]]})
    assert homology(c, -3) == group(1, [[3]])
    assert homology(c, -2).is_trivial()


# ---------------------------------------------------------------------------
# chain maps
# ---------------------------------------------------------------------------


def test_chain_map_must_commute():
    c = mult_complex(2)
    d = mult_complex(4)
    with pytest.raises(SpecError):
        chain_map(c, d, {0: [[1]], 1: [[1]]})
    ok = chain_map(c, d, {0: [[2]], 1: [[1]]})
    assert ok.map(0).data == ((2,),)


def test_induced_hom_multiplication():
    c = chain_complex({0: 1}, {})
    f = chain_map(c, c, {0: [[3]]})
    h = induced_hom(f, 0)
    assert h.matrix.data == ((3,),)
    assert not h.is_zero_map()


def test_induced_hom_through_quotient():
    # reduction Z -> Z/2 realized on Moore complexes
    c = chain_complex({0: 1}, {})
    d = mult_complex(2)
    f = chain_map(c, d, {0: [[1]]})
    h = induced_hom(f, 0)
    assert h.source == Z
    assert h.target == group(1, [[2]])
    assert not h.is_zero_map()


# ---------------------------------------------------------------------------
# shifts and sums
# ---------------------------------------------------------------------------


def test_shift_moves_homology():
    c = mult_complex(2)
    s = shift(c, 3)
    assert homology(s, 3) == group(1, [[2]])
    assert homology(s, 0).is_trivial()
    assert shift(s, -3).diff(1) == c.diff(1)


def test_direct_sum_homology_and_maps():
    c = mult_complex(2)
    d = mult_complex(3)
    total, i1, i2, p1, p2 = direct_sum(c, d)
    assert homology(total, 0) == group(2, [[2, 0], [0, 3]])
    assert i1.then(p1).map(0) == Mat.identity(1)
    assert i1.then(p2).map(0).data == ((0,),)


# ---------------------------------------------------------------------------
# fibers and cones
# ---------------------------------------------------------------------------


def test_fiber_of_identity_is_acyclic():
    c = mult_complex(2)
    fib = mapping_fiber(identity_chain_map(c))
    assert is_acyclic(fib.complex, fib.complex.lo - 1, fib.complex.hi + 1)


def test_fiber_of_zero_map_splits():
    c = chain_complex({0: 1}, {})
    d = chain_complex({0: 1}, {})
    f = chain_map(c, d, {})
    fib = mapping_fiber(f)
    assert homology(fib.complex, 0) == Z
    assert homology(fib.complex, -1) == Z


def test_fiber_of_map_from_zero_is_a_shift():
    c = mult_complex(3)
    f = chain_map(zero_complex(), c, {})
    fib = mapping_fiber(f)
    s = shift(c, -1)
    assert fib.complex.support == s.support
    for q in s.support:
        assert fib.complex.diff(q) == s.diff(q)


def test_fiber_of_two_points_over_a_circle():
    # two vertices mapping onto the circle's vertex: H_0 of the fiber is Z^2
    circle = chain_complex({0: 1, 1: 1}, {})
    points = chain_complex({0: 2}, {})
    f = chain_map(points, circle, {0: [[1], [1]]})
    fib = mapping_fiber(f)
    assert homology(fib.complex, 0) == free_group(2)
    assert homology(fib.complex, 1).is_trivial()
    assert homology(fib.complex, -1).is_trivial()


def test_fiber_of_multiplication_has_negative_degree_torsion():
    c = chain_complex({0: 1}, {})
    f = chain_map(c, c, {0: [[2]]})
    fib = mapping_fiber(f)
    assert homology(fib.complex, 0).is_trivial()
    assert homology(fib.complex, -1) == group(1, [[2]])
    report = fiber_les_report(f)
    assert report.ok, report.detail


def test_cone_of_iso_is_acyclic_and_detects_non_iso():
    c = mult_complex(2)
    assert is_acyclic(mapping_cone(identity_chain_map(c)))
    # doubling acts as zero on H_0 = Z/2, so it is not a quasi-iso
    f = chain_map(c, c, {0: [[2]], 1: [[2]]})
    assert not is_acyclic(mapping_cone(f))


def test_connecting_hom_realizes_the_boundary():
    c = chain_complex({0: 1}, {})
    f = chain_map(c, c, {0: [[2]]})
    fib = mapping_fiber(f)
    delta = connecting_hom(f, fib, -1)
    assert delta.source == Z
    assert delta.target == group(1, [[2]])
    assert not delta.is_zero_map()


def test_fiber_map_functoriality():
    c = mult_complex(2)
    d = mult_complex(4)
    f = identity_chain_map(c)
    g = identity_chain_map(d)
    phi = chain_map(c, d, {0: [[2]], 1: [[1]]})
    induced = fiber_map(f, g, phi, phi)
    fib_f = mapping_fiber(f)
    fib_g = mapping_fiber(g)
    lhs = induced.then(fib_g.proj)
    rhs = fib_f.proj.then(phi)
    for q in fib_f.complex.support:
        assert lhs.map(q) == rhs.map(q)


def test_fiber_map_rejects_noncommuting_square():
    c = chain_complex({0: 1}, {})
    f = chain_map(c, c, {0: [[2]]})
    g = chain_map(c, c, {0: [[3]]})
    one = identity_chain_map(c)
    with pytest.raises(SpecError):
        fiber_map(f, g, one, one)


# ---------------------------------------------------------------------------
# long exact sequences on random complexes
# ---------------------------------------------------------------------------


@st.composite
def elementary_complexes(draw):
    pieces = draw(
        st.lists(
            st.tuples(st.integers(-1, 2), st.integers(0, 6)),
            min_size=1,
            max_size=3,
        )
    )
    total = None
    for degree, n in pieces:
        if n == 0:
            piece = chain_complex({degree: 1}, {})
        else:
            piece = chain_complex(
                {degree: 1, degree + 1: 1}, {degree + 1: [[n]]}
            )
        total = piece if total is None else direct_sum(total, piece)[0]
    return total


@settings(max_examples=40, deadline=None)
@given(elementary_complexes(), st.integers(-3, 3))
def test_les_of_scalar_multiple_is_exact(c, k):
    f = chain_map(
        c, c, {q: Mat.identity(c.rank(q)).scale(k) for q in c.support}
    )
    report = fiber_les_report(f)
    assert report.ok, report.detail


@settings(max_examples=25, deadline=None)
@given(elementary_complexes(), elementary_complexes())
def test_les_of_zero_map_is_exact_and_splits(c, d):
    f = chain_map(c, d, {})
    report = fiber_les_report(f)
    assert report.ok, report.detail
    fib = mapping_fiber(f)
    for q in range(fib.complex.lo - 1, fib.complex.hi + 2):
        hc = homology(c, q)
        hd = homology(d, q + 1)
        got = homology(fib.complex, q)
        assert got.free_rank == hc.free_rank + hd.free_rank
        if got.is_finite():
            assert got.order() == hc.order() * hd.order()


# ---------------------------------------------------------------------------
# tensor products
# ---------------------------------------------------------------------------


def test_tensor_of_circles_is_a_torus():
    circle = chain_complex({0: 1, 1: 1}, {})
    torus = tensor_complex(circle, circle)
    assert homology(torus, 0) == Z
    assert homology(torus, 1) == free_group(2)
    assert homology(torus, 2) == Z
    assert torus.euler_characteristic() == 0


def test_tensor_torsion_and_tor_terms():
    t = tensor_complex(mult_complex(2), mult_complex(4))
    # H_0 = Z/2 (x) Z/4 = Z/2; H_1 = Tor(Z/2, Z/4) = Z/2; H_2 = 0
    assert homology(t, 0) == group(1, [[2]])
    assert homology(t, 1) == group(1, [[2]])
    assert homology(t, 2).is_trivial()
    # coprime torsion annihilates
    assert homology(tensor_complex(mult_complex(2), mult_complex(3)), 0).is_trivial()


def test_tensor_with_point_is_identity():
    c = mult_complex(5)
    point = chain_complex({0: 1}, {})
    t = tensor_complex(c, point)
    assert homology(t, 0) == homology(c, 0)
    assert homology(t, 1) == homology(c, 1)


def test_tensor_chain_map_is_functorial():
    c = mult_complex(2)
    circle = chain_complex({0: 1, 1: 1}, {})
    f = chain_map(c, c, {0: [[2]], 1: [[2]]})
    g = identity_chain_map(circle)
    t = tensor_chain_map(f, g)
    assert t.source.rank(1) == 2
    two = tensor_chain_map(f, g).then(t)
    ff = chain_map(c, c, {0: [[4]], 1: [[4]]})
    expected = tensor_chain_map(ff, g)
    for q in t.source.support:
        assert two.map(q) == expected.map(q)


@settings(max_examples=25, deadline=None)
@given(elementary_complexes())
def test_euler_characteristic_equals_homology_alternating_sum(c):
    total = 0
    for q in range(c.lo, c.hi + 1):
        sign = -1 if q % 2 else 1
        total += sign * homology(c, q).free_rank
    assert total == c.euler_characteristic()


# ---------------------------------------------------------------------------
# simplicial chains
# ---------------------------------------------------------------------------


def test_circle_model_homology():
    c = circle_model(3)
    chains = normalized_chains(c)
    assert chains.valid_hi is None  # certified complete
    assert homology(chains.complex, 0) == Z
    assert homology(chains.complex, 1) == Z
    assert homology(chains.complex, 2).is_trivial()
    assert homology(chains.complex, 3).is_trivial()


def test_nerve_piece_homology_is_a_circle():
    nat = monoid_nat()
    for j in (1, 2, 3):
        piece = dihedral_nerve_piece(nat, ((j,),), j + 1)
        chains = normalized_chains(piece)
        assert chains.valid_hi is None
        groups = homology_range(chains.complex, 0, j + 1)
        assert groups[0] == Z
        assert groups[1] == Z
        assert all(groups[q].is_trivial() for q in range(2, j + 2))


def test_normalized_and_full_chains_agree():
    nat = monoid_nat()
    objects = [circle_model(3), dihedral_nerve_piece(nat, ((2,),), 3)]
    for x in objects:
        norm = normalized_chains(x)
        full = full_chains(x)
        for q in range(0, full.valid_hi + 1):
            assert homology(norm.complex, q) == homology(full.complex, q)


def test_fixed_points_of_subdivided_piece_are_two_points():
    nat = monoid_nat()
    for j in (2, 3):
        piece = dihedral_nerve_piece(nat, ((j,),), 2 * j + 1)
        fixed = fixed_subset(sd_sigma(piece))
        chains = normalized_chains(fixed)
        assert homology(chains.complex, 0) == free_group(2)
        hi = fixed.q_max - 1 if chains.valid_hi is None else chains.valid_hi
        for q in range(1, hi + 1):
            assert homology(chains.complex, q).is_trivial()


def test_truncation_validity_guard():
    nat = monoid_nat()
    piece = dihedral_nerve_piece(nat, ((3,),), 2)  # bound 3 > depth 2
    chains = normalized_chains(piece)
    assert chains.valid_hi == 1
    assert simplicial_homology(piece, 1) == Z
    with pytest.raises(SpecError):
        simplicial_homology(piece, 2)
