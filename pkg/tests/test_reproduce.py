from logos.core.reproduce import reproduce_examples
from logos.io import codec
from logos.models import CheckStatus

POTENTIA_ROWS = {"potentia up x", "potentia down x", "potentia up y", "potentia down y"}


def test_worked_example_passes():
    report = reproduce_examples(seed=20180101, trials=100_000)
    assert report.passed, [r.name for r in report.failures]
    names = {r.name for r in report.rows}
    assert POTENTIA_ROWS <= names
    assert {"|c| up y", "|c| down y", "up y / down y", "potential contradiction"} <= names


def test_tampered_coefficients_fail_potentia_rows():
    report = reproduce_examples(coefficients=(0.6, 0.8), seed=1, trials=10_000)
    failed = {r.name for r in report.failures}
    assert POTENTIA_ROWS <= failed
    assert {"|c| up y", "|c| down y"} <= failed
    statuses = {r.name: r.status for r in report.rows}
    assert statuses["up y / down y"] is CheckStatus.PASS
    assert statuses["one actualization per trial"] is CheckStatus.PASS


def test_reports_are_byte_identical():
    first = codec.dumps(reproduce_examples(seed=3, trials=5000))
    second = codec.dumps(reproduce_examples(seed=3, trials=5000))
    assert first == second
