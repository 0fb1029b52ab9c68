"""Acceptance criteria, one test each; every test prints a PASS/FAIL line."""

import json
import time
from contextlib import contextmanager

import pytest

import oracles
from secondsemi import harness
from secondsemi.catalog import boolean, chain3_over, integers_mod
from secondsemi.cli import main
from secondsemi.errors import AxiomViolation
from secondsemi.semiring import (
    Semiring,
    is_prime_ideal,
    is_subtractive_ideal,
    product_semiring,
    semiring_axiom_holds,
    spec,
    validate_semiring,
)
from secondsemi.semimodule import (
    Semimodule,
    annihilator,
    enumerate_subsemimodules,
    regular_module,
    semimodule_axiom_holds,
    subsemimodule,
    validate_semimodule,
    whole_sub,
)
from secondsemi.second import (
    is_coidempotent,
    is_fully_coidempotent,
    is_minimal_subsemimodule,
    is_second,
    second_subsemimodules,
    socle,
)

VERIFIED_IDS = [
    "P27.6", "R-min-sec", "P2.2a", "P2.2b", "Pt3.2", "P28.51", "Pdf2.1", "Pdf2.9a", "Pdf2.9b",
    "Pdf2.9c", "P8l3.14", "Pt2.5a", "Pt2.5b", "Pt2.5c", "T8lfff3.14", "L2.98", "T2.998", "L2.9",
    "T2.10", "Pl2.9", "Tt3.6", "Cc3.7", "Tt3.8-alt",
]


@contextmanager
def criterion(capsys, label):
    try:
        yield
    except BaseException:
        with capsys.disabled():
            print(f"\nFAIL  {label}")
        raise
    with capsys.disabled():
        print(f"\nPASS  {label}")


def _cli_json(capsys, *argv):
    code = main(list(argv))
    out, _ = capsys.readouterr()
    return code, out


@pytest.fixture(scope="module")
def full_run():
    return {}


def _mutations(table, n):
    for i, row in enumerate(table):
        for j, v in enumerate(row):
            for w in range(n):
                if w != v:
                    t = [list(r) for r in table]
                    t[i][j] = w
                    yield t


def test_c1_axiom_validation(capsys):
    with criterion(capsys, "C1 single-cell mutations of B, Z4, C3 validated or rejected with replayable witness (< 5 s)"):
        start = time.perf_counter()
        counts = {"valid": 0, "rejected": 0}
        for R in (boolean(), integers_mod(4)):
            n, z, o = R.size, R.zero, R.one
            add, mul = R.add.tolist(), R.mul.tolist()
            cases = [(a, mul) for a in _mutations(add, n)] + [(add, m) for m in _mutations(mul, n)]
            for a, m in cases:
                bad = oracles.semiring_violations(n, z, o, a, m)
                try:
                    validate_semiring(n, z, o, a, m)
                except AxiomViolation as exc:
                    assert exc.axiom in bad
                    assert not semiring_axiom_holds(exc.axiom, n, z, o, a, m, exc.witness)
                    counts["rejected"] += 1
                else:
                    assert not bad
                    counts["valid"] += 1
        C3 = chain3_over(boolean())
        B = C3.base
        add, act = C3.add.tolist(), C3.act.tolist()
        cases = [(a, act) for a in _mutations(add, 3)] + [(add, t) for t in _mutations(act, 3)]
        for a, t in cases:
            bad = oracles.module_violations(B, 3, 0, a, t)
            try:
                validate_semimodule(B, 3, 0, a, t)
            except AxiomViolation as exc:
                assert exc.axiom in bad
                assert not semimodule_axiom_holds(exc.axiom, B, 0, a, t, exc.witness)
                counts["rejected"] += 1
            else:
                assert not bad
                counts["valid"] += 1
        assert counts["rejected"] > 0
        assert time.perf_counter() - start < 5.0


def test_c2_lattice_oracle(capsys, catalog):
    with criterion(capsys, "C2 closure enumeration equals subset filter for modules with <= 12 elements; Z16 -> 5, Z6 -> 4"):
        small = [M for M in catalog if isinstance(M, Semimodule) and M.size <= 12]
        assert small
        for M in small:
            got = [N.members for N in enumerate_subsemimodules(M)]
            assert got == [N.members for N in enumerate_subsemimodules(M, method="filter")], M.name
            assert got == [oracles.mask(S) for S in oracles.subs(M)], M.name
        by = {s.name: s for s in catalog}
        assert len(enumerate_subsemimodules(by["Z16-reg"])) == 5
        assert len(enumerate_subsemimodules(by["Z6-reg"])) == 4


def test_c3_example_in_z16(capsys):
    with criterion(capsys, "C3 {0,8} in Z16 is minimal and second; Ann = {0,2,...,14}, prime and subtractive"):
        M = regular_module(integers_mod(16))
        N = subsemimodule(M, {0, 8})
        assert is_minimal_subsemimodule(M, N)
        assert is_second(M, N)
        A = annihilator(M, N)
        assert A.elements == list(range(0, 16, 2))
        assert is_prime_ideal(M.base, A) and is_subtractive_ideal(M.base, A)


def test_c4_verified_run(capsys, full_run):
    with criterion(capsys, "C4 check --all --catalog: zero counterexamples on the listed ids, runtime < 300 s"):
        start = time.perf_counter()
        code, out = _cli_json(capsys, "check", "--all", "--catalog", "--format", "json")
        elapsed = time.perf_counter() - start
        full_run["first"] = out
        rows = json.loads(out)
        assert code in (0, 1)
        seen = {r["theorem"] for r in rows}
        assert set(VERIFIED_IDS) <= seen
        bad = [r for r in rows if r["theorem"] in VERIFIED_IDS and r["status"] == harness.COUNTEREXAMPLE]
        assert bad == []
        assert elapsed < 300


def test_c5_refutation(capsys, catalog):
    with criterion(capsys, "C5 check --theorem Tt3.8 --catalog: counterexample on Z6 that replays"):
        code, out = _cli_json(capsys, "check", "--theorem", "Tt3.8", "--catalog", "--format", "json")
        assert code == 1
        row = next(r for r in json.loads(out) if r["structure"] == "Z6-reg")
        assert row["status"] == harness.COUNTEREXAMPLE
        by = {s.name: s for s in catalog}
        M = by["Z6-reg"]
        assert harness.replay(row, [M])
        assert socle(M, whole_sub(M)) == whole_sub(M)
        (S,) = row["witness"]["socle_subsemimodules"]
        assert not any(set(S) <= set(N) for N in second_subsemimodules(M))


def test_c6_products(capsys, catalog):
    with criterion(capsys, "C6 Spec(BxB) one-sided; T2.998 verified on every semiring pair; Z6xZ6 has 4 one-sided seconds"):
        B = boolean()
        BB = product_semiring(B, B)
        # index a*2+b: {0}xB = {0,1}, Bx{0} = {0,2}
        assert [P.elements for P in spec(BB)] == [[0, 1], [0, 2]]
        rings = [s for s in catalog if isinstance(s, Semiring)]
        verdicts = harness.run_catalog(["T2.998"], catalog)
        assert len(verdicts) == len(rings) * (len(rings) + 1) // 2
        assert all(v.status == harness.VERIFIED for v in verdicts), [v for v in verdicts if v.status != harness.VERIFIED]
        P = next(s for s in catalog if s.name == "Z6xZ6-reg")
        secs = [set(N) for N in second_subsemimodules(P)]
        assert len(secs) == 4
        for S in secs:
            firsts = {x // 6 for x in S}
            seconds = {x % 6 for x in S}
            assert firsts == {0} or seconds == {0}


def test_c7_colon_and_coidempotent(capsys, catalog):
    with criterion(capsys, "C7 P8l3.14 hypothesis-filtered (unmet on Z4, verified where it holds); Z2 fully coidempotent, Z4 not via {0,2}"):
        mods = {s.name: s for s in catalog if isinstance(s, Semimodule)}
        assert harness.check("P8l3.14", [mods["Z4-reg"]]).status == harness.UNMET
        verdicts = [harness.check("P8l3.14", [M]) for M in mods.values()]
        assert any(v.status == harness.VERIFIED for v in verdicts)
        assert all(v.status in (harness.VERIFIED, harness.UNMET) for v in verdicts)
        assert is_fully_coidempotent(mods["Z2-reg"])
        Z4 = mods["Z4-reg"]
        assert not is_fully_coidempotent(Z4)
        bad = [N.elements for N in enumerate_subsemimodules(Z4) if not is_coidempotent(Z4, N)]
        assert bad == [[0, 2]]


def test_c8_determinism(capsys, full_run):
    with criterion(capsys, "C8 two check --all --catalog --format json runs are byte-identical"):
        first = full_run.get("first")
        if first is None:
            _, first = _cli_json(capsys, "check", "--all", "--catalog", "--format", "json")
        _, second = _cli_json(capsys, "check", "--all", "--catalog", "--format", "json")
        assert first == second
