from typing import Iterable, Tuple

from .dict import DeepDict


def make_report(**fields) -> DeepDict:
    """A fresh verification report; passes until a violation is recorded."""
    report = DeepDict(passed=True, violations=[])
    report.deep_update(fields)
    return report


def record_violation(report: DeepDict, check: str, **witness) -> None:
    report["passed"] = False
    report["violations"].append(dict(check=check, **witness))


def merge_reports(reports: Iterable[Tuple[str, DeepDict]], **fields) -> DeepDict:
    merged = make_report(**fields)
    for name, report in reports:
        merged[name] = report
        if not report["passed"]:
            merged["passed"] = False
            merged["violations"].extend(dict(violation, suite=name) for violation in report["violations"])
    return merged
