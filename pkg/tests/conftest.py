import sys
from pathlib import Path

sys.path.insert(0, str(Path(__file__).resolve().parent))

_CRITERIA: list[tuple[str, str]] = []


def record_criterion(name: str, ok: bool) -> None:
    _CRITERIA.append((name, "PASS" if ok else "FAIL"))


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    if not _CRITERIA:
        return
    terminalreporter.write_sep("-", "acceptance criteria")
    for name, verdict in _CRITERIA:
        terminalreporter.write_line(f"ACCEPTANCE {name}: {verdict}")
