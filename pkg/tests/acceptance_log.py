"""Collects the one-line verdicts printed by the acceptance tests."""

LINES: list[str] = []


def report(n: int, ok: bool, detail: str) -> str:
    line = f"criterion {n}: {'PASS' if ok else 'FAIL'} - {detail}"
    LINES.append(line)
    print(line)
    return line
