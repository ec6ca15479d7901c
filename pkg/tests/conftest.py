ACCEPTANCE_LINES: dict[int, list[tuple[str, bool, str]]] = {}


def record(number: int, name: str, passed: bool, detail: str) -> None:
    ACCEPTANCE_LINES.setdefault(number, []).append((name, passed, detail))


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE_LINES:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE_LINES):
        checks = ACCEPTANCE_LINES[number]
        ok = all(p for _, p, _ in checks)
        terminalreporter.write_line(f"criterion {number}: {'PASS' if ok else 'FAIL'}")
        for name, passed, detail in checks:
            terminalreporter.write_line(f"    [{'pass' if passed else 'FAIL'}] {name}: {detail}")
