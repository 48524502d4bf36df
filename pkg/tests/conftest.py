import re

import pytest

from qpart.gf import field_of_order

CRITERIA = {
    1: "Krawtchouk closed forms equal exact character sums",
    2: "brute-force dual partitions have the predicted structure",
    3: "MacWilliams transforms and row-space identities on 100 random codes",
    4: "Ferrers board suite",
    5: "q-Stirling numbers equal triangle rook polynomials",
    6: "rigidity of MRD and extremal codes",
    7: "stacked-RREF counting lemma",
    8: "pivot block sizes equal exhaustive counts",
    9: "preserver classification and non-extension",
    10: "CLI and selftest output is deterministic",
}

# per criterion: list of "passed", "failed" or "literal" (a strict xfail on a false formula)
_outcomes: dict[int, list[str]] = {}


@pytest.fixture(scope="session")
def F2():
    return field_of_order(2)


@pytest.fixture(scope="session")
def F3():
    return field_of_order(3)


@pytest.fixture(scope="session")
def F4():
    return field_of_order(4)


def pytest_runtest_logreport(report):
    m = re.search(r"test_acceptance\.py::test_c(\d\d)_", report.nodeid)
    if not m:
        return
    if hasattr(report, "wasxfail"):
        status = "literal"
    elif report.when == "call" or report.outcome == "failed":
        status = report.outcome
    else:
        return
    _outcomes.setdefault(int(m.group(1)), []).append(status)


def pytest_terminal_summary(terminalreporter):
    if not _outcomes:
        return
    terminalreporter.section("acceptance criteria (all comparisons exact, tolerance 0)")
    for k in sorted(CRITERIA):
        res = _outcomes.get(k)
        note = ""
        if res is None:
            status = "NOT RUN"
        elif any(r not in ("passed", "literal") for r in res):
            status = "FAIL"
        elif "literal" in res:
            status = "FAIL"
            note = " (formula false as displayed; corrected form passes)"
        else:
            status = "PASS"
        terminalreporter.write_line(f"{status} criterion {k:2d}: {CRITERIA[k]}{note}")
