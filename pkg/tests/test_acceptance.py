"""Acceptance criteria 1-10, one test each, built on the rows of ``leastcap.verify``.

Every test prints a PASS/FAIL line for its criterion; the terminal summary
repeats them (see conftest.py).
"""

import pytest

from leastcap.verify import run_checks

CRITERIA = {
    1: "t0 three ways (closed form, 2-D search, dn axis root)",
    2: "maximum inner radius of the unit isosceles right triangle",
    3: "lattice and elliptic constants g2, p(1), kappa, K(1/2), kappa_30",
    4: "p-map preimages of i and the phi/psi identity",
    5: "sn-dn map checkpoint, w0/kappa, similarity identity",
    6: "30-60-90 checkpoint, least capacity point, maximum radius",
    7: "6-9-13 via the Schwarz-Christoffel engine",
    8: "cross-engine agreement and similarity covariance",
    9: "special-function property suite",
    10: "figure geometry: boundary, nesting, orthogonality",
}

RESULTS = {}


@pytest.fixture(scope="module")
def rows():
    by_criterion = {}
    for row in run_checks():
        n = int("".join(ch for ch in row.id if ch.isdigit()))
        by_criterion.setdefault(n, []).append(row)
    return by_criterion


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, rows):
    checks = rows[n]
    failed = [c for c in checks if not c.passed()]
    worst = max(checks, key=lambda c: c.error / c.tol)
    status = "PASS" if not failed else "FAIL"
    line = (
        f"{status} criterion {n:>2}: {CRITERIA[n]} "
        f"({len(checks) - len(failed)}/{len(checks)} rows; tightest {worst.id} "
        f"err={worst.error:.2e} tol={worst.tol:.0e})"
    )
    RESULTS[n] = line
    print(line)
    for c in checks:
        print("    " + c.line())
    assert not failed, "\n".join(c.line() for c in failed)
