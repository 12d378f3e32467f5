"""Survey the zeroth homotopy Mackey functor over the built-in ring catalog.

Usage: python3 scripts/pi0_catalog.py
"""

from thrcalc.errors import SpecError
from thrcalc.involutive_algebra import (
    ring_F2,
    ring_F4,
    ring_Z,
    ring_Zmod,
    ring_dual_numbers_F2,
    ring_gaussian_integers,
    ring_hom,
)
from thrcalc.thr_pi0 import alpha_report, pi0_thr, ses_check, verify_base_change


def group_str(g):
    parts = []
    if g.free_rank:
        parts.append(f"Z^{g.free_rank}" if g.free_rank > 1 else "Z")
    parts.extend(f"Z/{d}" for d in g.invariant_factors)
    return " + ".join(parts) if parts else "0"


def survey(label, ring):
    try:
        result = pi0_thr(ring)
    except SpecError as exc:
        print(f"{label:<18} skipped ({exc})")
        return
    alpha = alpha_report(result)
    ses_check(result)
    mk = result.mackey
    verdict = "alpha iso" if alpha.is_iso else "alpha NOT iso"
    print(
        f"{label:<18} e = {group_str(mk.e):<16} g = {group_str(mk.g):<28} "
        f"{verdict}, sequence exact"
    )


def compare(label, source, target, rows):
    report = verify_base_change(ring_hom(source, target, rows))
    verdict = "isomorphism" if report.is_iso else "not an isomorphism"
    print(f"{label:<18} base change is {verdict}")
    if not report.is_iso:
        print(f"{'':<18} {report.obstruction()}")


def main():
    print("== functor levels, unit comparison, exactness ==")
    survey("Z", ring_Z())
    for n in (2, 3, 4, 8, 9):
        survey(f"Z/{n}", ring_Zmod(n))
    survey("F2", ring_F2())
    survey("F4", ring_F4())
    survey("F2[t]/(t^2)", ring_dual_numbers_F2())
    survey("Z[i] (conj.)", ring_gaussian_integers())

    print()
    print("== base change against direct computation ==")
    f2, f4, dual = ring_F2(), ring_F4(), ring_dual_numbers_F2()
    compare("F2 -> F4", f2, f4, [(1, 0)])
    compare("F2 -> F2[t]/(t^2)", f2, dual, [(1, 0)])
    compare("Z -> F2", ring_Z(), f2, [(1,)])


if __name__ == "__main__":
    main()
