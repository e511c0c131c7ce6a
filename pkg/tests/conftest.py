import os

from hypothesis import HealthCheck, settings

settings.register_profile("repo", deadline=None, suppress_health_check=[HealthCheck.too_slow], derandomize=True)
settings.load_profile(os.environ.get("HYPOTHESIS_PROFILE", "repo"))


# one PASS/FAIL line per acceptance criterion, collected from test outcomes
_CRITERIA: dict = {}
_TITLES = {
    1: "orbit atlas",
    2: "component groups",
    3: "Clifford identities",
    4: "matchup",
    5: "matrix oracle",
    6: "branching oracle",
    7: "BGG analysis",
    8: "SPIN x SPIN",
}


def pytest_runtest_logreport(report):
    if "test_acceptance.py::test_criterion_" not in report.nodeid:
        return
    if report.when != "call" and not (report.when == "setup" and report.outcome != "passed"):
        return
    k = int(report.nodeid.split("test_criterion_")[1].split("_")[0])
    if hasattr(report, "wasxfail"):
        state = "xfail"
    else:
        state = report.outcome
    _CRITERIA.setdefault(k, []).append((report.nodeid.split("::")[-1], state))


def pytest_terminal_summary(terminalreporter):
    if not _CRITERIA:
        return
    tr = terminalreporter
    tr.section("acceptance criteria")
    for k in sorted(_CRITERIA):
        runs = _CRITERIA[k]
        bad = [name for name, s in runs if s != "passed"]
        verdict = "PASS" if not bad else "FAIL"
        line = f"criterion {k} ({_TITLES.get(k, '')}): {verdict}"
        if bad:
            xf = [name for name, s in runs if s == "xfail"]
            line += f"  [{len(runs) - len(bad)}/{len(runs)} parts pass"
            if xf:
                line += f"; expected failures: {', '.join(xf)}"
            line += "]"
        tr.write_line(line)
