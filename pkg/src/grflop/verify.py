"""The full verification battery behind ``grflop verify-all``.

Every check is exact; a record is ``pass`` only if an integer identity holds
on the nose.  The battery covers: plus-side window pretilting with certified
cutoffs, the classical box collection's pullback, the minus-side vanishing
suite, exceptional-collection checks with a negative control, resolution
K-theory witnesses, graded-restriction window enumeration with the size-six
bound, the Kempf-Ness solver against its curated strata, the cross-side
graded Euler comparison, and report determinism.
"""

from __future__ import annotations

import os
from concurrent.futures import ThreadPoolExecutor
from fractions import Fraction

from . import data
from .exceptional import (ExceptionalCollection, builtin_collection,
                          builtin_resolution, check_collection, check_resolution)
from .filtered import euler_cross_check, vanishing_suite
from .homog import GR25, line_bundle, structure_sheaf
from .report import Report
from .stability import ConeProblem, hl_enumerate, kn_adapted, kn_stratification
from .total_space import XPLUS, is_pretilting, stable_cutoff


def thread_count() -> int:
    raw = os.environ.get("GRFLOP_THREADS", "1")
    try:
        return max(1, int(raw))
    except ValueError:
        return 1


def _run_all(jobs):
    """Run zero-argument callables, preserving order; threads per GRFLOP_THREADS."""
    n = thread_count()
    if n <= 1:
        return [job() for job in jobs]
    with ThreadPoolExecutor(max_workers=n) as pool:
        futures = [pool.submit(job) for job in jobs]
        return [f.result() for f in futures]


def _check_tilting(report: Report) -> None:
    for star in data.WINDOW_NAMES:
        bundle = data.window_sum_plus(star)
        result = is_pretilting(XPLUS, bundle)
        report.add_bool(f"tilting-xplus-{star}", result.ok, result)
    cert = stable_cutoff(XPLUS, data.window_sum_plus("spade"),
                         data.window_sum_plus("spade"))
    report.add_bool("cutoff-spade-equals-4", cert.l0 == 4, cert)
    result = is_pretilting(XPLUS, data.window_sum_plus("kapranov"))
    report.add_bool("tilting-xplus-kapranov", result.ok, result)


def _check_vanishing(report: Report) -> None:
    for item in vanishing_suite():
        report.add_bool(item.check_id, item.passed, item.details)


def _check_collections(report: Report) -> None:
    for name in data.COLLECTION_NAMES:
        rep = check_collection(builtin_collection(name))
        report.add_bool(f"collection-{name}", rep.passed, rep)
    control = ExceptionalCollection(
        "negative-control", GR25,
        (line_bundle(GR25, 5), structure_sheaf(GR25)))
    rep = check_collection(control)
    expected_witness = any(v.degree == 6 and v.dim == 1 for v in rep.violations)
    report.add_bool("collection-negative-control-fails",
                    (not rep.passed) and expected_witness, rep)


def _check_resolutions(report: Report) -> None:
    for name in data.RESOLUTION_NAMES:
        rep = check_resolution(builtin_resolution(name))
        report.add_bool(f"resolution-{name}", rep.passed, rep)


def _check_windows(report: Report) -> None:
    for (side, w), expected in data.HL_EXPECTED.items():
        got = hl_enumerate(w, side)
        report.add_bool(
            f"hl-{side}-{'_'.join(str(x) for x in w)}",
            got == tuple(sorted(expected)),
            {"expected": sorted(expected), "got": list(got)})
    worst = 0
    worst_w = None
    for w0 in range(-10, 11):
        for w1 in range(-10, 11):
            for w2 in range(-10, 11):
                n = len(hl_enumerate((w0, w1, w2), "minus"))
                if n > worst:
                    worst, worst_w = n, (w0, w1, w2)
    report.add_bool("hl-minus-size-bound", worst <= 6,
                    {"max_size": worst, "attained_at": list(worst_w) if worst_w else None,
                     "box": "[-10,10]^3"})


def _check_kempf_ness(report: Report) -> None:
    cases = [(rec["supports"], rec["character"],
              Fraction(*rec["value_sq"]), tuple(rec["weight"]))
             for side in ("plus", "minus") for rec in data.KN_STRATA[side]]
    absorbed = data.KN_ABSORBED_MINUS
    cases.append((absorbed["supports"], absorbed["character"],
                  Fraction(*absorbed["value_sq"]), tuple(absorbed["weight"])))
    for supports, character, value_sq, ray in cases:
        sol = kn_adapted(ConeProblem(supports, character))
        ok = sol.value_sq == value_sq and sol.minimizer == ray
        report.add_bool(
            f"kn-{character}-{'_'.join(supports)}", ok,
            {"expected_value_sq": value_sq, "expected_ray": list(ray), "got": sol})
    for side in ("plus", "minus"):
        try:
            strata = kn_stratification(side)
            report.add(f"kn-strata-{side}", "pass",
                       {"strata": [s for s in strata]})
        except AssertionError as exc:
            report.add(f"kn-strata-{side}", "fail", {"error": str(exc)})


def _check_euler(report: Report) -> None:
    jobs = [lambda s=star: euler_cross_check(s, 8) for star in data.WINDOW_NAMES]
    for result in _run_all(jobs):
        report.add_bool(f"euler-cross-{result['star']}",
                        result["equal"] and not result["plus_has_higher"], result)


def _check_determinism(report: Report) -> None:
    probe = Report("determinism-probe", {"w": [-7, -4, -1]})
    probe.add("hl-sample", "info",
              {"weights": [list(x) for x in hl_enumerate((-7, -4, -1), "plus")]})
    report.add_bool("report-determinism",
                    probe.to_json_text() == probe.to_json_text(), {})


def verify_all() -> Report:
    """Run the whole battery and return the aggregate report."""
    report = Report("verify-all")
    for step in (_check_tilting, _check_vanishing, _check_collections,
                 _check_resolutions, _check_windows, _check_kempf_ness,
                 _check_euler, _check_determinism):
        step(report)
    return report
