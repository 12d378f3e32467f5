"""Tests for the zeroth homotopy Mackey functor computations."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

from thrcalc.errors import SpecError
from thrcalc.fgab import group, lattice_contains, pure_tensor, tensor, vstack, Mat
from thrcalc.involutive_algebra import (
    mod2,
    ring_F2,
    ring_F4,
    ring_Z,
    ring_Zmod,
    ring_dual_numbers_F2,
    ring_gaussian_integers,
    ring_hom,
)
from thrcalc.mackey import is_mackey_iso
from thrcalc.thr_pi0 import (
    alpha_report,
    frobenius_twisted_square,
    pi0_thr,
    ses_check,
    t_span_rows,
    unit_comparison,
    verify_base_change,
)


def test_integers_give_the_constant_mackey_functor():
    result = pi0_thr(ring_Z())
    assert result.mackey.e == group(1, [])
    assert result.mackey.g == group(1, [])
    assert is_mackey_iso(unit_comparison(result))
    assert bool(ses_check(result))
    rep = alpha_report(result)
    assert rep.is_iso and rep.frobenius_surjective


def test_f2_values():
    result = pi0_thr(ring_F2())
    assert result.mackey.g == group(1, [[2]])
    # res(x (x) y) = xy is the identity here, tran = 2(-) (x) 1 vanishes.
    assert result.mackey.res.apply((1,)) == (1,)
    assert result.mackey.tran.is_zero_map()
    assert alpha_report(result).is_iso


def test_dual_numbers_fixed_level_is_sixteen_elements():
    result = pi0_thr(ring_dual_numbers_F2())
    assert result.mackey.g == group(4, [[2, 0, 0, 0], [0, 2, 0, 0],
                                        [0, 0, 2, 0], [0, 0, 0, 2]])
    rep = alpha_report(result)
    assert not rep.is_iso
    assert not rep.frobenius_surjective
    assert bool(ses_check(result))
    # res multiplies: t (x) t -> t^2 = 0
    t = (0, 1)
    assert result.mackey.res.apply(result.g_class(t, t)) == (0, 0)


def test_gaussian_integers_mod_two_match_dual_numbers():
    # F2[i] with i^2 = -1 = 1 is F2[i-1] with (i-1)^2 = 0: dual numbers in
    # another basis, so the fixed level again has sixteen elements.
    r2 = mod2(ring_gaussian_integers())
    result = pi0_thr(r2)
    assert result.mackey.g.order() == 16
    assert not alpha_report(result).is_iso


def test_nontrivial_involution_is_rejected():
    with pytest.raises(SpecError, match="trivial involution"):
        pi0_thr(ring_gaussian_integers())


def test_z4_short_exact_sequence():
    result = pi0_thr(ring_Zmod(4))
    assert result.mackey.g == group(1, [[4]])
    report = ses_check(result)
    assert report.doubled_ideal == group(1, [[2]])
    assert report.twisted_square == group(1, [[2]])
    assert bool(report)
    assert alpha_report(result).is_iso


def test_f4_fixed_level_and_alpha():
    result = pi0_thr(ring_F4())
    assert result.mackey.g.order() == 4
    assert alpha_report(result).is_iso


def test_transfer_values_over_z():
    result = pi0_thr(ring_Z())
    assert result.mackey.tran.apply((3,)) == (6,)
    # double coset: res(tran(a)) = 2a
    assert result.mackey.res.apply(result.mackey.tran.apply((3,))) == (6,)


def test_right_slot_module_action():
    result = pi0_thr(ring_dual_numbers_F2())
    t_action = result.module.action("g", (0, 1))
    one, t = (1, 0), (0, 1)
    moved = t_action.apply(result.g_class(one, one))
    assert result.mackey.g.same_element(moved, result.g_class(one, t))


SMALL_RINGS = [
    ring_F2(),
    ring_F4(),
    ring_dual_numbers_F2(),
    ring_Zmod(4),
    ring_Zmod(8),
    mod2(ring_gaussian_integers()),
]


@pytest.mark.parametrize("ring", SMALL_RINGS, ids=lambda r: repr(r.add))
def test_generator_span_equals_element_span(ring):
    """The relation subgroup spanned over generator triples contains the
    relations for every element triple (the additivity argument)."""
    n = ring.n_gens
    t = tensor(ring.add, ring.add)
    span = vstack(t.relations, Mat(t_span_rows(ring), cols=n * n))
    elements = ring.elements()
    for a in elements:
        square = ring.square(a)
        double = tuple(2 * c for c in a)
        for x in elements:
            for y in elements:
                for coeff in (square, double):
                    left = pure_tensor(n, x, ring.mul(coeff, y))
                    right = pure_tensor(n, ring.mul(coeff, x), y)
                    row = tuple(p - q for p, q in zip(left, right))
                    assert lattice_contains(span, row), (a, x, y, coeff)


def test_twisted_square_of_dual_numbers_is_full_tensor_square():
    # The Frobenius kills t, so no relations are imposed beyond mod 2.
    _, q = frobenius_twisted_square(ring_dual_numbers_F2())
    assert q.order() == 16


def test_twisted_square_of_f4_collapses():
    _, q = frobenius_twisted_square(ring_F4())
    assert q.order() == 4


def test_base_change_f2_to_f4_is_iso():
    rep = verify_base_change(ring_hom(ring_F2(), ring_F4(), [[1, 0]]))
    assert rep.is_iso


def test_base_change_f2_to_dual_numbers_is_not_iso():
    rep = verify_base_change(
        ring_hom(ring_F2(), ring_dual_numbers_F2(), [[1, 0]])
    )
    assert not rep.is_iso
    assert rep.source_levels[1].order() == 4
    assert rep.target_levels[1].order() == 16
    assert "g:" in rep.obstruction()


def test_base_change_z_to_z4_runs():
    rep = verify_base_change(ring_hom(ring_Z(), ring_Zmod(4), [[1]]))
    # The comparison is a well-defined Mackey morphism regardless of
    # whether it is an isomorphism.
    assert rep.comparison.f_g.source.n_gens == 1


@settings(max_examples=20, deadline=None)
@given(st.sampled_from(range(len(SMALL_RINGS))))
def test_certified_reports_are_internally_consistent(idx):
    ring = SMALL_RINGS[idx]
    result = pi0_thr(ring)
    # Both calls raise CertificateError on any internal disagreement.
    assert bool(ses_check(result))
    alpha_report(result)
