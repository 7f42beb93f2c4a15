import json

import pytest

from graphthrottle.errors import UnknownCheck
from graphthrottle.families import g1_chain
from graphthrottle.graph import parse_graph6
from graphthrottle.verify import (
    REGISTRY,
    CheckDef,
    g1_chain_instances,
    unit_interval_instances,
    verify_all,
    verify_theorem,
)


@pytest.mark.parametrize("check_id", sorted(REGISTRY))
def test_registered_check_passes(check_id):
    result = verify_theorem(check_id)
    assert result.passed, result.counterexample
    assert result.counterexample is None


def test_reduced_scope():
    result = verify_theorem("zf-star-n-minus-1", max_n=4)
    assert result.passed and result.scope == "n in [2, 4]"


def test_unknown_id():
    with pytest.raises(UnknownCheck):
        verify_theorem("no-such-check")


def test_failure_reports_first_counterexample(monkeypatch):
    bad = CheckDef("always-false", "fails on every graph", 2, 4, REGISTRY["zf-x-trivial"].source,
                   lambda g, config: g.n < 3)
    monkeypatch.setitem(REGISTRY, "always-false", bad)
    result = verify_theorem("always-false")
    assert not result.passed
    assert parse_graph6(result.counterexample).n == 3
    data = result.to_json()
    assert list(data) == ["id", "scope", "pass", "counterexample", "elapsed_ms"]
    assert data["counterexample"]
    json.dumps(data)


def test_instances_are_reproducible():
    assert unit_interval_instances() == unit_interval_instances()
    assert len(unit_interval_instances()) == 50
    assert all(g.n <= 10 for g in unit_interval_instances())
    chains = g1_chain_instances()
    assert chains[0] == g1_chain(1)
    assert len(chains) == 1 + 16


def test_verify_all_covers_registry():
    ids = [r.id for r in verify_all(max_n=4)]
    assert ids == list(REGISTRY)
