"""Acceptance suite: one test per criterion, each a single ``repro`` tag.

Every test prints one ``PASS``/``FAIL`` line.  Run directly with
``python tests/test_acceptance.py`` for just the fifteen lines.
"""

import sys

import pytest

from hessk3.repro import CRITERIA, run_task

TITLES = {
    1: "general configuration: rank 16, |disc| 48, 16-curve basis",
    2: "U+U(2)+A2(-2) embeddings for |n|,|m|,|a| <= 6",
    3: "Clebsch: rank 20, disc -15, E8 chains, U and T10 bases, disc 15 classes",
    4: "A4(-2) inside T_gen: Gram, complement, index 5, glue vector",
    5: "Eckardt table k = 1, 2, 2', 3, 4, 6",
    6: "Cayley: rank 20, disc -12, chains, residual, nodal family",
    7: "mixed cases X1n6, X3n4, X1n4",
    8: "non-Sylvester: Shioda-Tate, square graph, T_gen complement",
    9: "Hessian determinant identity",
    10: "degree 32 discriminant identity and spot values",
    11: "psi o phi = identity on 100 random points",
    12: "limit families ns1, ns2, cyclic and t^3 = xyz",
    13: "tritangent pipeline",
    14: "singular locus and catalog automorphisms",
    15: "property suites (1250 random instances)",
}


def status_line(n, report) -> str:
    word = "PASS" if report.passed else "FAIL"
    return f"{word} criterion {n:2d} [{CRITERIA[n]}] {TITLES[n]} ({report.elapsed:.2f}s)"


def failure_detail(report) -> str:
    lines = [c for c in report.to_text().splitlines() if "[FAIL]" in c or "error:" in c]
    return "\n".join(lines)


@pytest.mark.parametrize("n", sorted(CRITERIA))
def test_criterion(n, capsys):
    report = run_task(CRITERIA[n])
    with capsys.disabled():
        print("\n" + status_line(n, report))
    assert report.passed, failure_detail(report)


if __name__ == "__main__":
    failed = 0
    for n in sorted(CRITERIA):
        r = run_task(CRITERIA[n])
        print(status_line(n, r))
        failed += not r.passed
    sys.exit(1 if failed else 0)
