"""The eleven acceptance criteria, exact equality throughout."""

import subprocess
import sys
import time
from functools import lru_cache

from pfafflab import suites
from pfafflab.report import FAIL, SKIPPED_SINGULAR

from conftest import ACCEPTANCE

@lru_cache(maxsize=None)
def suite(name, N):
    start = time.perf_counter()
    rep = suites.run_suite(name, N)
    return rep, time.perf_counter() - start

def records(rep, prefix):
    return [r for r in rep.records if r.check_id == prefix or r.check_id.startswith(prefix + ".")]

def judge(k, recs, extra_ok=True, note=""):
    fails = [r for r in recs if r.status == FAIL]
    ok = bool(recs) and not fails and extra_ok
    text = "%d checks, %d failures%s" % (len(recs), len(fails), ("; " + note) if note else "")
    ACCEPTANCE[k] = (ok, text)
    print("criterion %d: %s (%s)" % (k, "PASS" if ok else "FAIL", text))
    assert recs, "no checks recorded"
    assert not fails, [r.to_dict() for r in fails[:3]]
    assert extra_ok, note

def test_criterion_01_algebra_core():
    r5, t5 = suite("algebra", 5)
    r7, t7 = suite("algebra", 7)
    recs = []
    for rep in (r5, r7):
        for cid in ("uea.antisymmetry", "uea.bracket_degree", "uea.jacobi", "uea.associativity"):
            recs += records(rep, cid)
    jac7 = len(records(r7, "uea.jacobi"))
    judge(1, recs, jac7 == 500 and t5 + t7 < 30, "N=7 jacobi samples %d, %.1fs" % (jac7, t5 + t7))

def test_criterion_02_commutator_lemma():
    r5, _ = suite("pfaffian-identities", 5)
    r7, t7 = suite("pfaffian-identities", 7)
    recs = records(r5, "pf.commutator_lemma") + records(r7, "pf.commutator_lemma")
    cases = {r.check_id for r in recs}
    sizes5 = {len(r.params["I"]) for r in records(r5, "pf.commutator_lemma")}
    sizes7 = {len(r.params["I"]) for r in records(r7, "pf.commutator_lemma")}
    judge(2, recs, len(cases) == 4 and sizes5 == {2, 4} and sizes7 == {2, 4, 6} and t7 < 300,
          "cases %s, N=7 %.1fs" % (sorted(cases), t7))

def test_criterion_03_hat_corollaries():
    recs = []
    for N in (5, 7):
        recs += records(suite("pfaffian-identities", N)[0], "pf.hat_corollary")
        recs += records(suite("pfaffian-identities", N)[0], "pf.hat_commutes_subalgebra")
        recs += records(suite("representations", N)[0], "rep.hat_commutes_matrix")
    modules = {(r.params["N"], r.params.get("module")) for r in recs if r.check_id == "rep.hat_commutes_matrix"}
    judge(3, recs, len(modules) >= 4, "matrix checks on %d modules" % len(modules))

def test_criterion_04_splitting_lemmas():
    recs = []
    for N in (5, 7):
        rep = suite("pfaffian-identities", N)[0]
        for cid in ("pf.split", "pf.split_averaged", "pf.minus_n_expansion", "pf.coproduct"):
            recs += records(rep, cid)
    sizes7 = {len(r.params["I"]) for r in recs if r.params["N"] == 7 and r.check_id == "pf.split_averaged"}
    judge(4, recs, sizes7 == {4, 6}, "N=7 sizes %s" % sorted(sizes7))

def test_criterion_05_weight_shift():
    recs = records(suite("representations", 5)[0], "rep.weight_shift")
    modules = {r.params.get("module") for r in recs}
    judge(5, recs, len(modules) == 3, "modules %s" % sorted(map(str, modules)))

def test_criterion_06_appendix():
    recs = []
    for N in (5, 7):
        rep = suite("appendix", N)[0]
        for cid in ("app.standard_annihilation", "app.short_tensor_vanishing", "app.half_tensor_form",
                    "app.half_tensor_sign", "app.o5_hat_expansion", "rep.tableau_action"):
            recs += records(rep, cid)
    errata = [e for e in suite("appendix", 5)[0].errata if e["name"] == "half_tensor_global_sign"]
    tableau = [r for r in recs if r.check_id == "rep.tableau_action"]
    judge(6, recs, bool(errata) and errata[0]["value"] in (1, -1) and len(tableau) > 0,
          "half-tensor sign %s, %d tableau checks" % (errata[0]["value"] if errata else None, len(tableau)))

def test_criterion_07_projected_pfaffians():
    recs, singular = [], []
    for N in (5, 7):
        rep = suite("mz", N)[0]
        for cid in ("mz.nonsymmetric_vanishing", "mz.nonsymmetric_symbolic", "mz.hc_symbolic",
                    "mz.hc_shift_pinning", "mz.symmetric_hc"):
            recs += records(rep, cid)
        singular += [r for r in records(rep, "mz.nonsymmetric_vanishing_singular")]
    # every singular skip must be covered by the exact symbolic statement for the same I
    symbolic_ok = {(r.params["N"], tuple(r.params["I"])) for r in recs
                   if r.check_id == "mz.nonsymmetric_symbolic" and r.status != FAIL}
    covered = all((r.params["N"], tuple(r.params["I"])) in symbolic_ok for r in singular)
    pins = [r for r in recs if r.check_id == "mz.hc_shift_pinning"]
    judge(7, recs, covered and len(pins) == 2 and all(r.status != FAIL for r in pins),
          "%d singular skips, all covered symbolically: %s" % (len(singular), covered))

def test_criterion_08_complement_pfaffian_on_highest_vectors():
    rep = suite("mz", 5)[0]
    recs = records(rep, "mz.theorem_tm")
    modules = {r.params["module"] for r in recs if r.status not in (FAIL, SKIPPED_SINGULAR)}
    kappas = {r.params["kappa"] for r in recs}
    judge(8, recs, len(modules) >= 3 and len(kappas) == 1, "%d modules, kappa %s" % (len(modules), kappas))

def test_criterion_09_main_theorem():
    rep = suite("mz", 5)[0]
    recs = []
    for cid in ("mz.main_pinning", "mz.xi_basis", "mz.block_antidiagonal", "mz.main_theorem",
                "mz.main_boundary", "mz.main_denominator"):
        recs += records(rep, cid)
    lams = {tuple(r.params["lambda"]) for r in recs if r.check_id == "mz.main_theorem"}
    sigma1 = [r for r in recs if r.check_id == "mz.main_theorem" and r.params["sigma"] == 1]
    judge(9, recs, len(lams) >= 2 and bool(sigma1), "modules %s, %d sigma=1 entries" % (sorted(lams), len(sigma1)))

def test_criterion_10_counting_oracles():
    rep = suite("representations", 5)[0]
    recs = records(rep, "mz.label_count") + records(rep, "mz.gt_count")
    lams = {tuple(r.params["lambda"]) for r in recs if r.check_id == "mz.gt_count"}
    judge(10, recs, len(lams) == len(suites.MODULE_SHAPES[5]), "%d highest weights" % len(lams))

def test_criterion_11_end_to_end():
    start = time.perf_counter()
    proc = subprocess.run([sys.executable, "-m", "pfafflab.cli", "verify", "all", "--n", "5"],
                          capture_output=True, text=True, timeout=600)
    elapsed = time.perf_counter() - start
    itemized = proc.returncode != 3 or "skipped-singular" in proc.stdout
    ok = proc.returncode in (0, 3) and elapsed < 600 and itemized
    ACCEPTANCE[11] = (ok, "exit %d in %.1fs" % (proc.returncode, elapsed))
    print("criterion 11: %s (exit %d in %.1fs)" % ("PASS" if ok else "FAIL", proc.returncode, elapsed))
    assert ok, proc.stdout[-2000:] + proc.stderr[-2000:]
