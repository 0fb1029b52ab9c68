import pytest

import oracles
from secondsemi import harness
from secondsemi.catalog import find
from secondsemi.errors import ArityMismatch
from secondsemi.semimodule import Semimodule, enumerate_subsemimodules
from secondsemi.second import second_subsemimodules


@pytest.fixture(scope="module")
def default_run(catalog):
    return harness.run_catalog(harness.ALL_IDS, catalog)


@pytest.fixture(scope="module")
def extended_run(extended):
    return harness.run_catalog(harness.ALL_IDS, extended)


def inputs_of(verdict, catalog):
    by = {s.name: s for s in catalog}
    return tuple(by[n] for n in verdict.structure.replace(" -> ", " x ").split(" x "))


def test_registry_is_total():
    assert set(harness.REGISTRY) == set(harness.THEOREM_IDS) | {"Tt3.8-alt"}
    assert len(harness.THEOREM_IDS) == 26


def test_p22a_on_z6(get):
    assert harness.check("P2.2a", [get("Z6-reg")]).status == harness.VERIFIED


def test_t210_on_z6xz6(get):
    M = get("Z6-reg")
    v = harness.check("T2.10", [M, M])
    assert v.status == harness.VERIFIED
    P = get("Z6xZ6-reg")
    secs = [frozenset(N) for N in second_subsemimodules(P)]
    left = [frozenset(a * 6 for a in S) for S in ({0, 3}, {0, 2, 4})]
    right = [frozenset(S) for S in ({0, 3}, {0, 2, 4})]
    assert sorted(secs, key=sorted) == sorted(left + right, key=sorted)


def test_t38_on_z6_is_counterexample(get):
    M = get("Z6-reg")
    v = harness.check("Tt3.8", [M])
    assert v.status == harness.COUNTEREXAMPLE
    assert v.witness == {"socle_subsemimodules": [[0, 1, 2, 3, 4, 5]]}
    assert harness.replay(v, [M])
    assert not any(len(S) == 6 for S in second_subsemimodules(M))


def test_empty_run():
    assert harness.run_catalog([], []) == []


def test_l298_single_pair(get):
    v = harness.check("L2.98", [get("Z4"), get("B")])
    assert v.status == harness.VERIFIED


def test_arity_mismatch(get):
    with pytest.raises(ArityMismatch):
        harness.check("P2.2a", [get("Z4")])
    with pytest.raises(ArityMismatch):
        harness.check("L2.98", [get("Z4-reg"), get("B")])
    with pytest.raises(ArityMismatch):
        harness.check("P2.7a", [get("Z4-reg"), get("B-reg")])


def test_unknown_variant(get):
    with pytest.raises(ValueError):
        harness.check("T2.10", [get("B-reg"), get("B-reg")], variant="nope")


def test_hypotheses_unmet_not_vacuous(get):
    # Z4 has a second subsemimodule {0,2} strictly inside a non-second one
    v = harness.check("P8l3.14", [get("Z4-reg")])
    assert v.status == harness.UNMET and v.witness is None and "reason" in v.detail
    v = harness.check("Pt2.5a", [get("Z4-reg")])
    assert v.status == harness.UNMET


def test_size_cap_skips(get):
    v = harness.check("P2.2a", [get("Z16-reg")], size_cap=8)
    assert v.status == harness.SKIPPED
    v = harness.check("P2.7a", [get("Z16-reg"), get("Z16-reg")], hom_cap=10)
    assert v.status == harness.SKIPPED


def test_every_counterexample_replays(default_run, extended_run, catalog, extended):
    for run, cat in ((default_run, catalog), (extended_run, extended)):
        for v in run:
            if v.status == harness.COUNTEREXAMPLE:
                assert v.witness is not None
                assert harness.replay(v, inputs_of(v, cat)), v


def test_counterexample_set_default(default_run):
    bad = sorted({(v.theorem, v.structure) for v in default_run if v.status == harness.COUNTEREXAMPLE})
    assert bad == [
        ("P2.7b", "T2-reg -> T2-reg"),
        ("Tt3.8", "BxB-reg"),
        ("Tt3.8", "Z2xZ3-reg"),
        ("Tt3.8", "Z6-reg"),
        ("Tt3.8", "Z6xZ6-reg"),
    ]


def test_extended_catalog_surfaces_more(extended_run):
    bad = {(v.theorem, v.structure) for v in extended_run if v.status == harness.COUNTEREXAMPLE}
    assert ("Pl2.9", "B@T2") in bad
    assert ("P2.7b", "T2-reg -> B@T2") in bad


def test_p27b_witness_is_zero_kernel_non_injective(get):
    T = get("T2-reg")
    v = harness.check("P2.7b", [T, T])
    f = v.witness["map"]
    assert [x for x in range(4) if f[x] == T.zero] == [T.zero]
    assert len(set(f)) < len(f)


def test_replay_rejects_non_witness(get):
    M = get("Z6-reg")
    assert not harness.replay({"theorem": "Tt3.8", "witness": {"socle_subsemimodules": [[0, 3]]}}, [M])
    assert not harness.replay(harness.check("P2.2a", [M]), [M])


def test_deterministic_order(catalog):
    a = harness.run_catalog(["P2.2a", "L2.98"], catalog)
    b = harness.run_catalog(["P2.2a", "L2.98"], catalog, jobs=2)
    assert [v.to_dict() for v in a] == [v.to_dict() for v in b]


def test_seconds_agree_with_oracle_on_catalog(catalog):
    for M in (s for s in catalog if isinstance(s, Semimodule)):
        want = [oracles.mask(S) for S in oracles.subs(M) if oracles.is_second(M, S)] if M.size <= 16 else None
        got = [N.members for N in second_subsemimodules(M)]
        if want is not None:
            assert got == want, M.name
        assert all(N in enumerate_subsemimodules(M) for N in second_subsemimodules(M))


def test_find_catalog(catalog):
    assert find(catalog, "Z16-reg").size == 16
    with pytest.raises(KeyError):
        find(catalog, "nope")
