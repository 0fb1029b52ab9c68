"""Property tests over catalog modules with hypothesis-drawn subsets."""

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import oracles
from secondsemi.catalog import builtin_catalog, extended_catalog
from secondsemi.semiring import Semiring, enumerate_ideals, is_subtractive_ideal
from secondsemi.semimodule import (
    Semimodule,
    annihilator,
    closure,
    colon_into,
    enumerate_subsemimodules,
    intersection,
    is_subtractive_subsemimodule,
    kernel,
    quotient,
    subtractive_closure,
    sum_of,
)
from secondsemi.second import is_second

MODULES = [s for s in extended_catalog() if isinstance(s, Semimodule) and s.size <= 36]
SMALL = [M for M in MODULES if M.size <= 16]
RINGS = [s for s in builtin_catalog() if isinstance(s, Semiring) and s.size <= 16]

fast = settings(max_examples=150, deadline=None)


@st.composite
def module_and_masks(draw, pool=MODULES, k=2):
    M = draw(st.sampled_from(pool))
    masks = [draw(st.integers(0, M.full_mask)) for _ in range(k)]
    return (M, *masks)


@st.composite
def module_and_subs(draw, pool=MODULES, k=2):
    M = draw(st.sampled_from(pool))
    subs = enumerate_subsemimodules(M)
    return (M, *[draw(st.sampled_from(subs)) for _ in range(k)])


@fast
@given(module_and_masks())
def test_closure_extensive_idempotent_monotone(args):
    M, a, b = args
    ca = closure(M, a)
    assert ca.members & a == a
    assert closure(M, ca) == ca
    assert closure(M, a) <= closure(M, a | b)
    assert oracles.is_closed(set(ca), M.zero, M.add_rows, M.act_rows)


@fast
@given(module_and_subs())
def test_annihilator_of_sum(args):
    M, N, K = args
    A = annihilator(M, sum_of(N, K))
    assert A.members == annihilator(M, N).members & annihilator(M, K).members


@fast
@given(module_and_subs(k=1))
def test_annihilator_subtractive(args):
    M, N = args
    assert is_subtractive_ideal(M.base, annihilator(M, N))


@fast
@given(module_and_subs(), st.data())
def test_colon_monotonicity(args, data):
    M, K1, K2 = args
    ideals = enumerate_ideals(M.base)
    I, J = data.draw(st.sampled_from(ideals)), data.draw(st.sampled_from(ideals))
    if I <= J:
        assert colon_into(M, K1, J) <= colon_into(M, K1, I)
    if K1 <= K2:
        assert colon_into(M, K1, I) <= colon_into(M, K2, I)
    lo = intersection(K1, K2)
    assert colon_into(M, lo, I) <= colon_into(M, K1, I)


@fast
@given(module_and_subs(pool=SMALL, k=1))
def test_subtractive_closure_is_least(args):
    M, N = args
    Nbar = subtractive_closure(M, N)
    assert N <= Nbar and is_subtractive_subsemimodule(M, Nbar)
    above = [K for K in enumerate_subsemimodules(M) if N <= K and is_subtractive_subsemimodule(M, K)]
    assert all(Nbar <= K for K in above)


@fast
@given(module_and_subs(pool=SMALL, k=1))
def test_quotient_kernel_is_zero_class(args):
    M, N = args
    Q, p = quotient(M, N)
    assert N <= kernel(p)
    zero_class = [x for x in range(M.size) if p(x) == p(M.zero)]
    assert kernel(p).elements == zero_class


@fast
@given(module_and_subs(k=1), st.data())
def test_second_is_scalar_image_dichotomy(args, data):
    M, N = args
    a = data.draw(st.integers(0, M.base.size - 1))
    if is_second(M, N):
        img = {M.act_rows[a][x] for x in N}
        assert img == set(N) or img == {M.zero}


@pytest.mark.parametrize("M", [M for M in MODULES if M.size <= 12], ids=lambda M: M.name)
def test_enumerate_equals_filter(M):
    assert [N.members for N in enumerate_subsemimodules(M)] == [
        N.members for N in enumerate_subsemimodules(M, method="filter")
    ]


@pytest.mark.parametrize("R", [R for R in RINGS if R.size <= 6], ids=lambda R: R.name)
def test_ideals_equal_filter(R):
    assert [I.members for I in enumerate_ideals(R)] == [I.members for I in enumerate_ideals(R, method="filter")]
