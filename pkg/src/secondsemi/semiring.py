"""Finite commutative semirings given by Cayley tables, and their ideals."""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Iterator, Sequence

import numpy as np

from . import bitset
from ._lattice import TableLattice
from .errors import AxiomViolation, NotProper, ShapeError


@dataclass(frozen=True, eq=False)
class Semiring:
    """A validated finite commutative semiring on elements ``0..size-1``.

    Build instances with :func:`validate_semiring` (or the trusted
    constructors in this package); the dataclass itself checks nothing.
    Equality is identity: two tables that happen to agree are still
    different semirings as far as ideals and modules are concerned.
    """

    size: int
    zero: int
    one: int
    add: np.ndarray = field(repr=False)
    mul: np.ndarray = field(repr=False)
    name: str = "R"

    @cached_property
    def add_rows(self) -> list[list[int]]:
        return self.add.tolist()

    @cached_property
    def mul_rows(self) -> list[list[int]]:
        return self.mul.tolist()

    @cached_property
    def lattice(self) -> TableLattice:
        return TableLattice(self.size, self.zero, self.add_rows, self.mul_rows)

    @property
    def elements(self) -> range:
        return range(self.size)

    @property
    def full_mask(self) -> int:
        return bitset.full(self.size)

    def __repr__(self) -> str:
        return f"Semiring({self.name!r}, size={self.size})"


@dataclass(frozen=True)
class SubsetOf:
    """A subset of a parent structure, stored as a bitmask."""

    parent: object
    members: int

    def __contains__(self, x: int) -> bool:
        return bool((self.members >> x) & 1)

    def __iter__(self) -> Iterator[int]:
        return bitset.members(self.members)

    def __len__(self) -> int:
        return bitset.count(self.members)

    @property
    def elements(self) -> list[int]:
        return bitset.to_list(self.members)

    def __le__(self, other: SubsetOf) -> bool:
        return bitset.is_subset(self.members, other.members)

    def __lt__(self, other: SubsetOf) -> bool:
        return self.members != other.members and self <= other

    def __repr__(self) -> str:
        name = getattr(self.parent, "name", "?")
        return f"{type(self).__name__}({name}, {{{', '.join(map(str, self))}}})"


class Ideal(SubsetOf):
    parent: Semiring


def as_mask(subset: int | SubsetOf | Iterable[int]) -> int:
    if isinstance(subset, int):
        return subset
    if isinstance(subset, SubsetOf):
        return subset.members
    return bitset.from_iter(subset)


# -- validation -------------------------------------------------------------


def _check_table(name: str, table, rows: int, cols: int, bound: int) -> np.ndarray:
    try:
        arr = np.array(table, dtype=np.int64)
    except (TypeError, ValueError) as exc:
        raise ShapeError(f"{name}: not a rectangular integer table ({exc})") from None
    if arr.shape != (rows, cols):
        raise ShapeError(f"{name}: expected shape {rows}x{cols}, got {'x'.join(map(str, arr.shape))}")
    if arr.size and (arr.min() < 0 or arr.max() >= bound):
        raise ShapeError(f"{name}: entries must lie in 0..{bound - 1}")
    arr = arr.astype(np.intp)
    arr.setflags(write=False)
    return arr


def _first(bad: np.ndarray) -> tuple | None:
    hits = np.argwhere(bad)
    if len(hits) == 0:
        return None
    return tuple(int(v) for v in hits[0])


def semiring_axiom_holds(axiom: str, size: int, zero: int, one: int, add, mul, witness: Sequence[int]) -> bool:
    """Re-evaluate one axiom instance by direct table lookups.

    Deliberately scalar and independent of the vectorised scan in
    :func:`validate_semiring`, so rejected witnesses can be replayed.
    """
    w = tuple(witness)
    if axiom == "zero != one":
        return zero != one
    if axiom == "add-identity":
        (a,) = w
        return add[zero][a] == a and add[a][zero] == a
    if axiom == "mul-identity":
        (a,) = w
        return mul[one][a] == a and mul[a][one] == a
    if axiom == "zero-absorbs":
        (a,) = w
        return mul[zero][a] == zero and mul[a][zero] == zero
    if axiom == "add-commutative":
        a, b = w
        return add[a][b] == add[b][a]
    if axiom == "mul-commutative":
        a, b = w
        return mul[a][b] == mul[b][a]
    if axiom == "add-associative":
        a, b, c = w
        return add[add[a][b]][c] == add[a][add[b][c]]
    if axiom == "mul-associative":
        a, b, c = w
        return mul[mul[a][b]][c] == mul[a][mul[b][c]]
    if axiom == "distributive":
        a, b, c = w
        return mul[a][add[b][c]] == add[mul[a][b]][mul[a][c]]
    raise KeyError(axiom)


def validate_semiring(size: int, zero: int, one: int, add, mul, name: str = "R") -> Semiring:
    """Check every semiring axiom on the given tables.

    Raises :class:`ShapeError` for malformed input and
    :class:`AxiomViolation` naming the first failing axiom with a
    lexicographically least witness.
    """
    if not isinstance(size, int) or size < 1:
        raise ShapeError(f"size must be a positive integer, got {size!r}")
    for label, v in (("zero", zero), ("one", one)):
        if not isinstance(v, (int, np.integer)) or not 0 <= v < size:
            raise ShapeError(f"{label} must be an element index in 0..{size - 1}, got {v!r}")
    A = _check_table("add", add, size, size, size)
    M = _check_table("mul", mul, size, size, size)
    zero, one = int(zero), int(one)
    e = np.arange(size)

    if zero == one:
        raise AxiomViolation("zero != one", (zero,), name)
    checks = [
        ("add-identity", (A[zero, :] != e) | (A[:, zero] != e)),
        ("mul-identity", (M[one, :] != e) | (M[:, one] != e)),
        ("zero-absorbs", (M[zero, :] != zero) | (M[:, zero] != zero)),
        ("add-commutative", A != A.T),
        ("mul-commutative", M != M.T),
    ]
    for axiom, bad in checks:
        w = _first(bad)
        if w is not None:
            raise AxiomViolation(axiom, w, name)
    # triple axioms, indexed [a, b, c]
    triples = [
        ("add-associative", lambda: A[A[:, :, None], e[None, None, :]] != A[e[:, None, None], A[None, :, :]]),
        ("mul-associative", lambda: M[M[:, :, None], e[None, None, :]] != M[e[:, None, None], M[None, :, :]]),
        ("distributive", lambda: M[e[:, None, None], A[None, :, :]] != A[M[:, :, None], M[:, None, :]]),
    ]
    for axiom, bad in triples:
        w = _first(bad())
        if w is not None:
            raise AxiomViolation(axiom, w, name)
    return Semiring(size, zero, one, A, M, name)


def _trusted(size: int, zero: int, one: int, add: np.ndarray, mul: np.ndarray, name: str) -> Semiring:
    add = np.ascontiguousarray(add, dtype=np.intp)
    mul = np.ascontiguousarray(mul, dtype=np.intp)
    add.setflags(write=False)
    mul.setflags(write=False)
    return Semiring(size, zero, one, add, mul, name)


def product_semiring(R1: Semiring, R2: Semiring, name: str | None = None) -> Semiring:
    """Componentwise product; the pair (a, b) has index ``a * |R2| + b``."""
    n2 = R2.size

    def combine(t1: np.ndarray, t2: np.ndarray) -> np.ndarray:
        # rows indexed by (a1, a2), columns by (b1, b2)
        big = t1[:, None, :, None] * n2 + t2[None, :, None, :]
        return big.reshape(R1.size * n2, R1.size * n2)

    return _trusted(
        R1.size * n2,
        R1.zero * n2 + R2.zero,
        R1.one * n2 + R2.one,
        combine(R1.add, R2.add),
        combine(R1.mul, R2.mul),
        name or f"{R1.name}x{R2.name}",
    )


def pair_index(R2_size: int, a: int, b: int) -> int:
    return a * R2_size + b


# -- ideals -----------------------------------------------------------------


def is_ideal(R: Semiring, subset) -> bool:
    mask = as_mask(subset)
    if mask == 0 or mask >> R.size:
        return False
    return R.lattice.is_closed(mask)


def ideal(R: Semiring, subset) -> Ideal:
    mask = as_mask(subset)
    if not is_ideal(R, mask):
        raise ValueError(f"{bitset.to_list(mask)} is not an ideal of {R.name}")
    return Ideal(R, mask)


def ideal_generated(R: Semiring, gens) -> Ideal:
    return Ideal(R, R.lattice.closure(as_mask(gens)))


def zero_ideal(R: Semiring) -> Ideal:
    return Ideal(R, 1 << R.zero)


def whole(R: Semiring) -> Ideal:
    return Ideal(R, R.full_mask)


def ideal_sum(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.parent, I.parent.lattice.join(I.members, J.members))


def ideal_intersection(I: Ideal, J: Ideal) -> Ideal:
    return Ideal(I.parent, I.members & J.members)


def ideal_product(I: Ideal, J: Ideal) -> Ideal:
    """The ideal IJ: finite sums of products ab with a in I, b in J."""
    R = I.parent
    mul = R.mul_rows
    prods = 0
    js = J.elements
    for a in I:
        for b in js:
            prods |= 1 << mul[a][b]
    return Ideal(R, R.lattice.closure(prods))


def is_subtractive_ideal(R: Semiring, I: Ideal) -> bool:
    """a + b in I and b in I imply a in I."""
    mask = as_mask(I)
    inside = bitset.to_array(mask, R.size)
    # sums[a, b] for b in I; any a outside I landing in I is a violation
    lands = inside[R.add[:, inside]].any(axis=1)
    return not (lands & ~inside).any()


def is_prime_ideal(R: Semiring, I: Ideal) -> bool:
    mask = as_mask(I)
    if mask == R.full_mask:
        return False
    out = ~bitset.to_array(mask, R.size)
    idx = np.flatnonzero(out)
    inside = ~out
    return not inside[R.mul[np.ix_(idx, idx)]].any()


def is_strong_ideal(R: Semiring, I: Ideal) -> bool:
    """Every element of the proper ideal I has an additive inverse in I."""
    mask = as_mask(I)
    if mask == R.full_mask:
        raise NotProper(f"strong ideals are proper; got the whole of {R.name}")
    idx = bitset.index_array(mask)
    sums = R.add[np.ix_(idx, idx)]
    return bool((sums == R.zero).any(axis=1).all())


def enumerate_ideals(R: Semiring, method: str = "closure") -> list[Ideal]:
    """All ideals in ascending bitmask order.

    ``method="closure"`` joins principal ideals breadth-first;
    ``method="filter"`` tests all ``2**size`` subsets and is kept as an
    oracle for small semirings.
    """
    if method == "closure":
        masks = R.lattice.enumerate_by_closure()
    elif method == "filter":
        masks = R.lattice.enumerate_by_filter()
    else:
        raise ValueError(f"unknown method {method!r}")
    return [Ideal(R, m) for m in masks]


def is_maximal_ideal(R: Semiring, I: Ideal) -> bool:
    mask = as_mask(I)
    if mask == R.full_mask:
        return False
    return not any(
        J.members != mask and J.members != R.full_mask and bitset.is_subset(mask, J.members)
        for J in enumerate_ideals(R)
    )


def spec(R: Semiring) -> list[Ideal]:
    """Prime ideals of R, ascending."""
    return [I for I in enumerate_ideals(R) if is_prime_ideal(R, I)]


def maximal_ideals(R: Semiring) -> list[Ideal]:
    return [I for I in enumerate_ideals(R) if is_maximal_ideal(R, I)]
