"""Acceptance gate: one test per criterion, each timed against its budget."""
import time

import pytest

from conftest import ACCEPTANCE_LINES
from schubreg import grothendieck as gr
from schubreg import pipedreams as pd
from schubreg.cli import stats_record
from schubreg.perm import Permutation
from schubreg.verify import check


def cold():
    for f in (gr.groth_single, gr.groth_double, gr.cm_single, gr.cm_double,
              pd.max_pipe_dream, pd._fibers):
        f.cache_clear()


@pytest.fixture
def criterion(request):
    """Yields a recorder; the line is written whether or not the body passes."""
    state = {"label": request.node.name, "budget": None, "start": None, "detail": ""}

    def start(label, budget_s):
        cold()
        state.update(label=label, budget=budget_s, start=time.perf_counter())

    yield state, start
    elapsed = time.perf_counter() - state["start"] if state["start"] else 0.0
    failed = request.node.rep_call.failed if hasattr(request.node, "rep_call") else True
    over = state["budget"] is not None and elapsed > state["budget"]
    status = "FAIL" if failed or over else "PASS"
    line = f"{status}  {state['label']:<48} {elapsed:8.2f}s / {state['budget']}s  {state['detail']}"
    ACCEPTANCE_LINES.append(line)
    print(line)


def finish(state, budget, reports):
    elapsed = time.perf_counter() - state["start"]
    for r in reports:
        assert r.passed, f"{r.check}: {r.failures}"
    state["detail"] = ", ".join(f"{r.check}(n<={r.n_max}, {r.checked} cases)" for r in reports)
    assert elapsed < budget, f"took {elapsed:.1f}s, budget {budget}s"


def test_01_worked_example(criterion):
    state, start = criterion
    start("1 worked example", 1)
    rec = stats_record(Permutation.parse("293417568"))
    assert tuple(rec["raj_code"]) == (3, 7, 2, 2, 1, 2, 0, 0, 0)
    assert (rec["raj"], rec["inv"], rec["regularity"]) == (17, 12, 5)
    state["detail"] = "raj 17, inv 12, regularity 5"
    assert time.perf_counter() - state["start"] < 1


def test_02_degree_equals_raj(criterion):
    state, start = criterion
    start("2 degree = raj = max crosses (n<=6)", 300)
    finish(state, 300, [check("degree_theorem", 6)])


def test_03_factorization_and_leading_term(criterion):
    state, start = criterion
    start("3 factorization, leading term, bound (n<=5)", 120)
    finish(state, 120, [check("factorization", 5), check("leading_term", 5), check("exponent_bound", 5)])


def test_04_max_pipe_dream(criterion):
    state, start = criterion
    start("4 max pipe dream (oracle n<=5, built n<=8)", 120)
    finish(state, 120, [check("max_pipe_dream", 8)])


def test_05_raj_is_max_maj(criterion):
    state, start = criterion
    start("5 raj = max maj over weak down-sets (n<=6)", 180)
    finish(state, 180, [check("raj_mm", 6)])


def test_06_cauchy(criterion):
    state, start = criterion
    start("6 Cauchy identity (S_4)", 60)
    finish(state, 60, [check("cauchy", 4)])


def test_07_derivative_recurrence(criterion):
    state, start = criterion
    start("7 derivative recurrence + dichotomy (n<=5)", 120)
    r = check("deriv_recurrence", 5)
    finish(state, 120, [r])
    assert r.summary["dichotomy_cases"][2] > 0
    state["detail"] += f", cases {r.summary['dichotomy_cases']}"


def test_08_max_regularity(criterion):
    state, start = criterion
    start("8 max regularity formula and maximizers (n<=8)", 180)
    r = check("maxreg", 8)
    finish(state, 180, [r])
    assert r.summary["maxima"] == [0, 0, 1, 2, 4, 7, 10, 14]


def test_09_bell_counts(criterion):
    state, start = criterion
    start("9 fireworks and distinct CM counts are Bell", 120)
    fw, cm = check("fireworks_bell", 8), check("distinct_cm", 6)
    finish(state, 120, [fw, cm])
    assert fw.summary["counts"] == [1, 2, 5, 15, 52, 203, 877, 4140]
    assert cm.summary["counts"] == [1, 2, 5, 15, 52, 203]


def test_10_cross_route_consistency(criterion):
    state, start = criterion
    start("10 pipes vs operators, rN vs top part, codes", 300)
    finish(state, 300, [check("groth_pipes", 6), check("raj_poly_recursion", 5), check("raj_code_routes", 7)])
