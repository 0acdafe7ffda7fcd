import pytest

from osforge.field import FieldContext
from osforge.verify import STATEMENTS, SUITES, Check, Report, property_suite, run_suite


@pytest.mark.parametrize("name", [s for s in SUITES if s != "properties"])
def test_corpus_suites_pass(name):
    report = run_suite(name, seed=1)
    assert report.checks
    assert report.passed, [c.as_dict() for c in report.failures][:5]
    assert {c.tag.split(".")[0] for c in report.checks} == {name}


@pytest.mark.parametrize("name", ["exterior", "rank", "mobius", "crapo", "nbc"])
def test_property_batteries(name):
    checks = property_suite(name, cases=200, seed=3)
    assert len(checks) == 200 and all(c.ok for c in checks)


def test_property_batteries_are_deterministic():
    a = [c.as_dict() for c in property_suite("crapo", cases=50, seed=7)]
    b = [c.as_dict() for c in property_suite("crapo", cases=50, seed=7)]
    assert a == b


def test_rationals_field():
    report = run_suite("hilbert", field=FieldContext.rationals())
    assert report.passed and report.field == "QQ"


def test_every_tag_has_a_statement():
    tags = {c.tag for name in ("hilbert", "regular") for c in run_suite(name).checks}
    assert tags <= set(STATEMENTS)


def test_report_summary_and_failures():
    r = Report("demo", 0, "GF(7)", [Check("duality.dims", "x", True, 1, 1),
                                     Check("duality.dims", "y", False, 1, 2)])
    d = r.as_dict()
    assert not r.passed and len(r.failures) == 1
    assert d["summary"]["duality.dims"]["passed"] == 1 and d["summary"]["duality.dims"]["total"] == 2
    assert d["failures"][0]["got"] == 2 and "checks" not in d
    assert len(r.as_dict(include_passing=True)["checks"]) == 2


def test_unknown_suite():
    with pytest.raises(KeyError):
        run_suite("nope")
    with pytest.raises(ValueError):
        property_suite("nope", cases=1)
