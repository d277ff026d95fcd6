ACCEPTANCE = {}


def record(number, title, passed, detail):
    """Store the outcome of an acceptance criterion for the terminal summary."""
    ACCEPTANCE[number] = (title, bool(passed), detail)
    print(f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}: {detail}")


def pytest_terminal_summary(terminalreporter):
    if not ACCEPTANCE:
        return
    terminalreporter.section("acceptance criteria")
    for number in sorted(ACCEPTANCE):
        title, passed, detail = ACCEPTANCE[number]
        terminalreporter.write_line(f"criterion {number:2d} {'PASS' if passed else 'FAIL'}  {title}: {detail}")
