"""Small named semirings and semimodules used by the theorem harness."""

from __future__ import annotations

import numpy as np

from .semiring import Semiring, _trusted, product_semiring
from .semimodule import (
    Semimodule,
    _trusted as _trusted_module,
    external_product,
    product_same_base,
    quotient,
    regular_module,
    closure,
    zero_module,
)

Structure = Semiring | Semimodule


def boolean() -> Semiring:
    add = np.array([[0, 1], [1, 1]])
    mul = np.array([[0, 0], [0, 1]])
    return _trusted(2, 0, 1, add, mul, "B")


def integers_mod(n: int) -> Semiring:
    e = np.arange(n)
    return _trusted(n, 0, 1 % n, (e[:, None] + e[None, :]) % n, (e[:, None] * e[None, :]) % n, f"Z{n}")


def truncated_tropical(top: int = 2) -> Semiring:
    """{0, 1, ..., top, inf} with min as addition (identity inf) and
    addition capped at ``top`` as multiplication (identity 0).

    Index i < top + 1 is the integer i; index top + 1 is infinity.
    """
    inf = top + 1
    n = top + 2
    add = [[min(a, b) for b in range(n)] for a in range(n)]
    mul = [[inf if inf in (a, b) else min(a + b, top) for b in range(n)] for a in range(n)]
    return _trusted(n, inf, 0, np.array(add), np.array(mul), f"T{top}")


def chain3_over(B: Semiring) -> Semimodule:
    """The chain 0 < a < 1 with max as addition; 1 acts trivially, 0 kills."""
    add = [[max(x, y) for y in range(3)] for x in range(3)]
    act = [[0, 0, 0], [0, 1, 2]]
    return _trusted_module(B, 3, 0, np.array(add), np.array(act), "C3")


def builtin_catalog() -> list[Structure]:
    """Default catalog: semirings first, then semimodules, in a fixed order."""
    B = boolean()
    rings = [B] + [integers_mod(n) for n in (2, 3, 4, 6, 8, 16)] + [truncated_tropical(2)]
    by_name = {R.name: R for R in rings}
    regs = [regular_module(R) for R in rings]
    reg = {M.base.name: M for M in regs}
    products = [
        external_product(reg[a], reg[b], f"{a}x{b}-reg", base=product_semiring(by_name[a], by_name[b], f"{a}x{b}"))
        for a, b in (("B", "B"), ("Z2", "Z3"), ("Z6", "Z6"))
    ]
    modules = regs + [chain3_over(by_name["B"])] + products
    return rings + [M.base for M in products] + modules


def extended_catalog() -> list[Structure]:
    """The default catalog plus modules that are not regular or not faithful.

    Includes B with T2 acting through "finite -> 1, inf -> 0"; that module
    is second and simple but its annihilator {inf} is not maximal.
    """
    base = builtin_catalog()
    rings = {s.name: s for s in base if isinstance(s, Semiring)}
    extra: list[Semimodule] = []
    Z4 = rings["Z4"]
    Z4reg = next(s for s in base if isinstance(s, Semimodule) and s.name == "Z4-reg")
    Z2_over_Z4, _ = quotient(Z4reg, closure(Z4reg, [2]), name="Z2@Z4")
    extra.append(Z2_over_Z4)
    extra.append(product_same_base(Z4reg, Z2_over_Z4, name="Z4+Z2@Z4"))
    Breg = next(s for s in base if isinstance(s, Semimodule) and s.name == "B-reg")
    extra.append(product_same_base(Breg, Breg, name="B+B@B"))
    T2 = rings["T2"]
    act = [[0, 1] if r != T2.zero else [0, 0] for r in range(T2.size)]
    extra.append(_trusted_module(T2, 2, 0, np.array([[0, 1], [1, 1]]), np.array(act), "B@T2"))
    extra.append(zero_module(Z4, name="0@Z4"))
    return base + extra


def find(catalog: list[Structure], name: str) -> Structure:
    for s in catalog:
        if s.name == name:
            return s
    raise KeyError(f"no structure named {name!r}")
