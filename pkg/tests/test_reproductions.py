import pytest

from holoforge.config import Limits
from holoforge.errors import UnknownExample, UnknownSuite
from holoforge.reproductions import run_example
from holoforge.suites import run_suite


@pytest.mark.parametrize("p,n", [(5, 2), (3, 3)])
def test_e3_other_parameters(p, n):
    rep = run_example("e3", p=p, n=n)
    assert rep.overall
    assert {a.name: a.actual for a in rep.assertions}["|Hol(V,H)|"] == p ** n * 2 * p


@pytest.mark.parametrize("name,params", [("e3", {"p": 2}), ("e9", {"n": 5}), ("e7", {"n": 3}), ("e1", {"m": 1})])
def test_out_of_range_parameters(name, params):
    with pytest.raises(ValueError):
        run_example(name, **params)


def test_unknown_names():
    with pytest.raises(UnknownExample):
        run_example("e42")
    with pytest.raises(UnknownSuite):
        run_suite("nope")


def test_seed_changes_random_cases_not_verdicts():
    a = run_suite("psimilar", Limits(seed=1))
    b = run_suite("psimilar", Limits(seed=2))
    assert a.overall and b.overall
    assert a.inputs["seed"] == 1 and b.inputs["seed"] == 2
