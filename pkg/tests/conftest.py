from __future__ import annotations

import re

from hypothesis import HealthCheck, settings

settings.register_profile(
    "ci",
    max_examples=25,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("ci")


ACCEPTANCE_DESCRIPTIONS = {
    1: "quadric relation pullback along eta vanishes (n in 2..5, over q and fp:5)",
    2: "ideal identities <x..,x_n x_{n+1},z> = <x..> and the quotient unit (n in 2..3)",
    3: "a/b identity, elementary endomorphism, closed form of the modified map (n in 1..4)",
    4: "delta splitting identity, mu(-1) closed form, degree twist, phi consistency",
    5: "two-row reduction postconditions on seeded pairs and the universal pair",
    6: "fold model row, witness identity and certificate replay (n in 4..5)",
    7: "membership agreement with the degree-bounded linear-algebra oracle",
    8: "every produced elementary word has determinant exactly 1",
    9: "byte-identical CLI reports and exit status 0",
}

_acceptance_outcomes: dict[int, tuple[str, float]] = {}


def pytest_runtest_logreport(report):
    if report.when != "call":
        return
    m = re.search(r"test_criterion_(\d+)", report.nodeid)
    if m:
        _acceptance_outcomes[int(m.group(1))] = (report.outcome, report.duration)


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _acceptance_outcomes:
        return
    terminalreporter.section("acceptance criteria")
    for k in sorted(ACCEPTANCE_DESCRIPTIONS):
        if k in _acceptance_outcomes:
            outcome, duration = _acceptance_outcomes[k]
            verdict = "PASS" if outcome == "passed" else "FAIL"
            terminalreporter.write_line(
                f"criterion {k}: {verdict} ({duration:.1f}s) {ACCEPTANCE_DESCRIPTIONS[k]}"
            )
        else:
            terminalreporter.write_line(
                f"criterion {k}: NOT RUN {ACCEPTANCE_DESCRIPTIONS[k]}"
            )
