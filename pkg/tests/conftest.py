from __future__ import annotations


def pytest_terminal_summary(terminalreporter, exitstatus, config):
    from .test_acceptance import RESULTS

    if not RESULTS:
        return
    terminalreporter.section("acceptance criteria")
    for num in sorted(RESULTS):
        title, ok, detail = RESULTS[num]
        line = f"criterion {num}: {'PASS' if ok else 'FAIL'} {title}"
        terminalreporter.write_line(line + (f" ({detail})" if detail else ""))
