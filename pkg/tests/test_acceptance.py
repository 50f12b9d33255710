"""One test per acceptance criterion, each printing a single PASS/FAIL line."""

import time

import pytest

from polydomain.verify import Options, run_suite

OPTS = Options(prec=50, kmax=6, seed=0)


@pytest.fixture
def report(capsys):
    def emit(number, title, suites, limit, judge=None):
        t0 = time.perf_counter()
        results = [run_suite(name, OPTS) for name in suites]
        elapsed = time.perf_counter() - t0
        extra_ok, detail = judge(results[0].data) if judge else (True, "")
        ok = all(r.passed for r in results) and extra_ok and elapsed < limit
        failed = [line for r in results for line in r.lines if line.startswith("FAIL")]
        msg = f"{'PASS' if ok else 'FAIL'}  criterion {number:>2}: {title} ({elapsed:.2f}s / {limit}s)"
        if detail:
            msg += f"  {detail}"
        with capsys.disabled():
            print("\n" + msg)
        assert not failed, "\n".join(failed)
        assert elapsed < limit
        assert extra_ok, detail
        return results

    return emit


def test_criterion_01_surjection_lemma(report):
    report(1, "surjection lemma, n, m <= 8, EGF to order 20", ["surjection-lemma"], 5)


def test_criterion_02_quasi_shuffle_morphism(report):
    report(2, "hsum is a stuffle morphism, weight <= 6, N <= 40, 200 heavier pairs", ["quasi-shuffle"], 30)


def test_criterion_03_shuffle_and_hadamard(report):
    report(3, "shuffle morphism on Taylor data and Hadamard identity, order 20", ["shuffle-li", "hadamard-eq3"], 30)


def test_criterion_04_stars_and_stuffle_exponential(report):
    report(4, "stuffle of stars and (z^k y_k)* as a stuffle exponential, weight 8, k = 1, 2, 3", ["wi-star", "wik-exp"], 20)


def test_criterion_05_one_parameter_group(report):
    report(5, "G(1/3) stuffle G(1/5) = G(8/15), weight 6", ["group-law"], 10)


def test_criterion_06_preimage(report):
    report(6, "Li of the preimage reproduces 10 random Taylor polynomials", ["preimage"], 10)


def test_criterion_07_zeta_twos(report):
    def judge(d):
        return d["max_abs_diff"] < 1e-30, f"max diff {d['max_abs_diff']:.2e}"

    report(7, "zeta({2}^k)/pi^2k = 1/(2k+1)!, k <= 6", ["zeta-2k"], 10, judge)


def test_criterion_08_zeta_31(report):
    def judge(d):
        g = d["sign_gaps"]
        ok = d["zeta31_diff"] < 1e-6 and g["4^-1"] < 1e-6 and g["4^+1"] > 1e-3
        return ok, f"|zeta(3,1) - pi^4/360| = {d['zeta31_diff']:.2e}, consistent exponent {d['resolution']}"

    report(8, "zeta(3,1) = pi^4/360 and the 4^(+-k) sign", ["zeta-31"], 60, judge)


def test_criterion_09_sin_formula(report):
    def judge(d):
        return d["sup_error"] < 1e-20, f"sup error {d['sup_error']:.2e}"

    report(9, "exp(ell_2(ix)) = sin(pi x)/(pi x) on 50 points", ["sin-formula"], 10, judge)


def test_criterion_10_reflection(report):
    def judge(d):
        worst = max(d["max_diff"].values())
        return worst < 1e-15 and d["classical_diff"] < 1e-15, f"max diff {worst:.2e}"

    report(10, "generalized reflection, r = 1, 2, 3, 20 points", ["reflection"], 30, judge)


def test_criterion_11_zero_sets(report):
    def judge(d):
        at = max(d[r]["max_at_zero"] for r in (1, 2, 3))
        off = min(d[r]["min_at_control"] for r in (1, 2, 3))
        return at < 1e-20 and off >= 0.01, f"max at zeros {at:.2e}, min at controls {off:.3f}"

    report(11, "predicted zeros, |p| <= 3.2, r = 1, 2, 3", ["zeros"], 20, judge)


def test_criterion_12_regularization(report):
    def judge(d):
        count, bad = d["morphism_pairs"]
        return bad == 0 and d["fit_diff"] < 1e-8, f"{count} pairs, fit diff {d['fit_diff']:.2e}"

    report(12, "stuffle regularization morphism and gamma_(y1 y1)", ["regularization"], 60, judge)


def test_criterion_13_dom_witness(report):
    report(13, "Li of S(t) = (1-z)/(1-(t+1)z), t = 1/2, 1, 2", ["dom-witness"], 10)
