"""One test per acceptance criterion; each prints a single PASS/FAIL line."""

import time
from contextlib import contextmanager

import pytest

from holoforge.config import Limits
from holoforge.reproductions import NOT_REPRODUCED, run_example
from holoforge.suites import SUITES, run_suite

LIMITS = Limits(seed=0)


@contextmanager
def criterion(label, limit):
    """Collects ok/detail from the body and always prints one PASS/FAIL line."""
    state = {"ok": False, "detail": ""}
    start = time.perf_counter()
    try:
        yield state
    except Exception as exc:
        state["ok"], state["detail"] = False, f"{type(exc).__name__}: {exc}"
        raise
    finally:
        seconds = time.perf_counter() - start
        status = "PASS" if state["ok"] and seconds < limit else "FAIL"
        detail = f" - {state['detail']}" if state["detail"] else ""
        print(f"criterion {label}: {status} ({seconds:.1f} s, limit {limit} s){detail}")
    assert state["ok"] and seconds < limit


def checks(report):
    return {a.name: a for a in report.assertions}


def test_criterion_1_cyclic_conjugacy_matches_oracle():
    with criterion(1, 30) as st:
        rep = run_suite("lindo", LIMITS)
        gl22, gl23 = rep.results["GL_2(2)"], rep.results["GL_2(3)"]
        ok = (rep.overall and gl22 == {"scope": "all", "pairs": 36, "disagreements": 0}
              and gl23["scope"] == "reps" and gl23["pairs"] > 0 and gl23["disagreements"] == 0)
        st["detail"] = f"GL_2(2) {gl22['pairs']} pairs, GL_2(3) {gl23['pairs']} representative pairs, 0 disagreements"
        st["ok"] = ok


def test_criterion_2_example_final():
    with criterion(2, 60) as st:
        rep = run_example("final", LIMITS)
        c = checks(rep)
        expected = {
            "order of A": 24,
            "det A": 7,
            "det B": 3,
            "<A> and <B> conjugate in GL_4(Z/8Z)": "NotConjugate",
            "refuted by the determinant": True,
            "|G| by full closure": 98304,
            "[G,G] abelian invariants": [8, 8, 8, 4],
            "G/[G,G] abelian invariants": [24, 2],
            "subgroups containing [G,G] with index 2": 3,
            "[G,G] x <A^12> abelian invariants": [[8, 8, 8, 4, 2]],
            "the other two overgroups have the invariants of U": [[8, 8, 8, 8], [8, 8, 8, 8]],
        }
        ok = rep.overall and all(c[k].passed and c[k].actual == v for k, v in expected.items())
        ok = ok and c["A^12 equals the stored matrix"].passed
        ok = ok and c["re-based action of A on W in the basis {y, f2, f3, f4}"].passed
        ok = ok and rep.results["separating_invariant"].startswith("determinant: det A = 7, det(B^i) = 3")
        st["detail"] = f"{len(rep.assertions)} assertions"
        st["ok"] = ok


def test_criterion_3_examples_e3_e7():
    with criterion(3, 30) as st:
        e3 = run_example("e3", LIMITS, p=3)
        e7 = run_example("e7", LIMITS)
        c3, c7 = checks(e3), checks(e7)
        ok = e3.overall and e7.overall
        ok = ok and c3["|Hol(V,H)|"].actual == 54 and c7["|Hol(V,H)|"].actual == 128
        ok = ok and c3["action of v2 in the basis {v1, B}"].passed and c3["action of A in the basis {v1, B}"].passed
        ok = ok and all(c[k].passed for c in (c3, c7) for k in c if k.startswith("Hol(V,H) and Hol(V,L)"))
        ok = ok and all(c["H and L are not isomorphic (fingerprints differ)"].passed for c in (c3, c7))
        st["detail"] = "orders 54 and 128, witnesses verified"
        st["ok"] = ok


def test_criterion_4_example_e9():
    with criterion(4, 30) as st:
        reps = [run_example("e9", LIMITS, p=p) for p in (2, 3)]
        ok = True
        for rep in reps:
            c = checks(rep)
            ok = ok and rep.overall and c["largest rank in T_L"].actual == 2
            ok = ok and c["T_H contains a rank-3 matrix"].passed
            ok = ok and c["center of Hol(V,H) is <v1, v2, v3>"].passed and c["center of Hol(V,L) is <v1, v2, v3>"].passed
            ok = ok and all(c[f"action of v{i} equals S(B{i - 3})"].passed for i in (4, 5, 6))
        st["detail"] = "p = 2 and p = 3"
        st["ok"] = ok


def test_criterion_5_example_e1():
    with criterion(5, 120) as st:
        rep = run_example("e1", LIMITS, p=2, m=2)
        c = checks(rep)
        ok = rep.overall and c["|G|"].actual == 32
        ok = ok and c["|C(x2)|"].actual == 16 and c["|C(y)|"].actual == 8
        ok = ok and c["Hol(G, i(x2)) isomorphic to G x C_p"].passed and c["Hol(G, i(y)) isomorphic to G x C_p"].passed
        ok = ok and c["automorphisms conjugating <i(x2)> onto <i(y)>"].actual == 0
        st["detail"] = f"|Aut(G)| = {rep.results['aut_order']}, no conjugator"
        st["ok"] = ok


def test_criterion_6_example_e6():
    with criterion(6, 300) as st:
        reps = {name: run_example(name, LIMITS) for name in ("e6a", "e6b", "e6c", "e6d")}
        a, b = checks(reps["e6a"]), checks(reps["e6b"])
        ok = all(r.overall for r in reps.values())
        ok = ok and a["F_2^2 is admitting"].actual is False
        ok = ok and reps["e6b"].results["classes_per_order"][4] == 3
        ok = ok and b["H, K, J holomorphs: (derived order, class)"].actual == {"H": (4, 2), "K": (2, 2), "J": (4, 3)}
        ok = ok and b["order-12 holomorphs have different derived orders"].passed
        ok = ok and b["order-24 holomorphs have different derived orders"].passed
        st["detail"] = "e6a-e6d, caps listed in the e6c/e6d inputs"
        st["ok"] = ok


def test_criterion_7_property_suites():
    with criterion(7, 600) as st:
        failed, counts = [], []
        for name in SUITES:
            rep = run_suite(name, LIMITS)
            counts.append(f"{name} {rep.results['exhaustive_cases']}+{rep.results['random_cases']}")
            if not (rep.overall and rep.results["random_cases"] >= 200 and not rep.results["counterexamples"]):
                failed.append(name)
        # no time limit is stated for this criterion; the bound here only guards against hangs
        st["detail"] = ("all suites clean: " if not failed else f"failed {failed}: ") + ", ".join(counts)
        st["ok"] = not failed


def test_criterion_8_exclusions_are_explicit():
    with criterion(8, 1) as st:
        ok = set(NOT_REPRODUCED) == {"final-classification", "relative-holomorph-count"}
        ok = ok and all(entry["reason"] and entry["substitute"] for entry in NOT_REPRODUCED.values())
        st["detail"] = "NOT REPRODUCED by design: " + "; ".join(NOT_REPRODUCED)
        st["ok"] = ok


@pytest.mark.parametrize("name", ["e3", "e7", "e9", "e1", "e6a", "e6d"])
def test_reports_are_deterministic_in_content(name):
    def content(r):
        return [(a.name, str(a.actual), a.passed) for a in r.assertions]

    assert content(run_example(name, LIMITS)) == content(run_example(name, LIMITS))
