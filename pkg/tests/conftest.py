from pathlib import Path

import pytest

GOLDEN_DIR = Path(__file__).parent / "golden"


def pytest_addoption(parser):
    parser.addoption(
        "--update-golden",
        action="store_true",
        default=False,
        help="rewrite the golden SVG files from current output",
    )


@pytest.fixture
def golden(request):
    """Compare rendered text against a stored golden file byte for byte."""

    update = request.config.getoption("--update-golden")

    def check(name: str, text: str) -> None:
        path = GOLDEN_DIR / name
        if update:
            GOLDEN_DIR.mkdir(exist_ok=True)
            path.write_text(text, encoding="utf-8")
        assert path.exists(), f"golden file {name} missing; run pytest --update-golden"
        assert text == path.read_text(encoding="utf-8"), (
            f"output differs from golden {name}; "
            "run pytest --update-golden if the change is intended"
        )

    return check


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    reports = []
    for key in ("passed", "failed"):
        reports.extend(
            report
            for report in terminalreporter.stats.get(key, [])
            if getattr(report, "when", None) == "call"
            and "test_acceptance" in report.nodeid
        )
    if not reports:
        return
    terminalreporter.section("acceptance criteria")
    for report in sorted(reports, key=lambda item: item.nodeid):
        status = "PASS" if report.passed else "FAIL"
        name = report.nodeid.split("::")[-1]
        terminalreporter.write_line(f"{status}  {name}")
