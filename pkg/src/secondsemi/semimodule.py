"""Finite semimodules over a finite commutative semiring.

A semimodule is an addition table on ``0..size-1`` plus an action table
``act[r][x] = r*x``.  Subsemimodules are bitmasks wrapped in
:class:`Subsemimodule`; homomorphisms are plain index maps.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterator, Sequence

import numpy as np

from . import bitset
from ._lattice import TableLattice
from .errors import AxiomViolation, NotHomomorphism, ParentMismatch, ShapeError
from .semiring import (
    Ideal,
    Semiring,
    SubsetOf,
    _check_table,
    _first,
    as_mask,
    ideal_product,
    product_semiring,
)


@dataclass(frozen=True, eq=False)
class Semimodule:
    base: Semiring
    size: int
    zero: int
    add: np.ndarray = field(repr=False)
    act: np.ndarray = field(repr=False)
    name: str = "M"

    @cached_property
    def add_rows(self) -> list[list[int]]:
        return self.add.tolist()

    @cached_property
    def act_rows(self) -> list[list[int]]:
        return self.act.tolist()

    @cached_property
    def lattice(self) -> TableLattice:
        return TableLattice(self.size, self.zero, self.add_rows, self.act_rows)

    @property
    def full_mask(self) -> int:
        return bitset.full(self.size)

    def __repr__(self) -> str:
        return f"Semimodule({self.name!r} over {self.base.name!r}, size={self.size})"


class Subsemimodule(SubsetOf):
    parent: Semimodule

    @property
    def is_zero(self) -> bool:
        return self.members == 1 << self.parent.zero


# -- validation -------------------------------------------------------------

MODULE_AXIOMS = (
    "add-identity",
    "1m=m",
    "r0=0",
    "0m=0",
    "add-commutative",
    "add-associative",
    "(rs)m=r(sm)",
    "r(m+n)=rm+rn",
    "(r+s)m=rm+sm",
)


def semimodule_axiom_holds(axiom: str, R: Semiring, zero: int, add, act, witness: Sequence[int]) -> bool:
    """Scalar replay of one semimodule axiom instance."""
    w = tuple(witness)
    radd, rmul = R.add_rows, R.mul_rows
    if axiom == "add-identity":
        (x,) = w
        return add[zero][x] == x and add[x][zero] == x
    if axiom == "1m=m":
        (x,) = w
        return act[R.one][x] == x
    if axiom == "r0=0":
        (r,) = w
        return act[r][zero] == zero
    if axiom == "0m=0":
        (x,) = w
        return act[R.zero][x] == zero
    if axiom == "add-commutative":
        x, y = w
        return add[x][y] == add[y][x]
    if axiom == "add-associative":
        x, y, z = w
        return add[add[x][y]][z] == add[x][add[y][z]]
    if axiom == "(rs)m=r(sm)":
        r, s, x = w
        return act[rmul[r][s]][x] == act[r][act[s][x]]
    if axiom == "r(m+n)=rm+rn":
        r, x, y = w
        return act[r][add[x][y]] == add[act[r][x]][act[r][y]]
    if axiom == "(r+s)m=rm+sm":
        r, s, x = w
        return act[radd[r][s]][x] == add[act[r][x]][act[s][x]]
    raise KeyError(axiom)


def validate_semimodule(R: Semiring, size: int, zero: int, add, act, name: str = "M") -> Semimodule:
    """Check every semimodule axiom; raise on the first failure."""
    if not isinstance(size, int) or size < 1:
        raise ShapeError(f"size must be a positive integer, got {size!r}")
    if not isinstance(zero, (int, np.integer)) or not 0 <= zero < size:
        raise ShapeError(f"zero must be an element index in 0..{size - 1}, got {zero!r}")
    zero = int(zero)
    A = _check_table("add", add, size, size, size)
    T = _check_table("act", act, R.size, size, size)
    e = np.arange(size)
    r = np.arange(R.size)

    pointwise = [
        ("add-identity", (A[zero, :] != e) | (A[:, zero] != e)),
        ("1m=m", T[R.one, :] != e),
        ("r0=0", T[:, zero] != zero),
        ("0m=0", T[R.zero, :] != zero),
        ("add-commutative", A != A.T),
    ]
    for axiom, bad in pointwise:
        w = _first(bad)
        if w is not None:
            raise AxiomViolation(axiom, w, name)
    triples = [
        ("add-associative", lambda: A[A[:, :, None], e[None, None, :]] != A[e[:, None, None], A[None, :, :]]),
        # [r, s, x]
        ("(rs)m=r(sm)", lambda: T[R.mul[:, :, None], e[None, None, :]] != T[r[:, None, None], T[None, :, :]]),
        # [r, x, y]
        ("r(m+n)=rm+rn", lambda: T[r[:, None, None], A[None, :, :]] != A[T[:, :, None], T[:, None, :]]),
        # [r, s, x]
        ("(r+s)m=rm+sm", lambda: T[R.add[:, :, None], e[None, None, :]] != A[T[:, None, :], T[None, :, :]]),
    ]
    for axiom, bad in triples:
        w = _first(bad())
        if w is not None:
            raise AxiomViolation(axiom, w, name)
    return Semimodule(R, size, zero, A, T, name)


def _trusted(R: Semiring, size: int, zero: int, add: np.ndarray, act: np.ndarray, name: str) -> Semimodule:
    add = np.ascontiguousarray(add, dtype=np.intp)
    act = np.ascontiguousarray(act, dtype=np.intp)
    add.setflags(write=False)
    act.setflags(write=False)
    return Semimodule(R, size, zero, add, act, name)


def regular_module(R: Semiring, name: str | None = None) -> Semimodule:
    """R acting on itself by multiplication."""
    return _trusted(R, R.size, R.zero, R.add, R.mul, name or f"{R.name}-reg")


def zero_module(R: Semiring, name: str | None = None) -> Semimodule:
    z = np.zeros((1, 1), dtype=np.intp)
    return _trusted(R, 1, 0, z, np.zeros((R.size, 1), dtype=np.intp), name or f"0-{R.name}")


# -- subsemimodules ---------------------------------------------------------


def _check_parent(*subs: SubsetOf) -> None:
    first = subs[0].parent
    for s in subs[1:]:
        if s.parent is not first:
            raise ParentMismatch(f"{s!r} does not live in {first!r}")


def is_subsemimodule(M: Semimodule, subset) -> bool:
    mask = as_mask(subset)
    return not mask >> M.size and M.lattice.is_closed(mask)


def subsemimodule(M: Semimodule, subset) -> Subsemimodule:
    mask = as_mask(subset)
    if not is_subsemimodule(M, mask):
        raise ValueError(f"{bitset.to_list(mask)} is not a subsemimodule of {M.name}")
    return Subsemimodule(M, mask)


def closure(M: Semimodule, subset=0) -> Subsemimodule:
    """Smallest subsemimodule containing ``subset``."""
    return Subsemimodule(M, M.lattice.closure(as_mask(subset)))


def zero_sub(M: Semimodule) -> Subsemimodule:
    return Subsemimodule(M, 1 << M.zero)


def whole_sub(M: Semimodule) -> Subsemimodule:
    return Subsemimodule(M, M.full_mask)


def enumerate_subsemimodules(M: Semimodule, method: str = "closure") -> list[Subsemimodule]:
    """All subsemimodules in ascending bitmask order.

    ``method="filter"`` scans all ``2**size`` subsets; it exists to
    cross-check the closure method on small modules.
    """
    if method == "closure":
        masks = M.lattice.enumerate_by_closure()
    elif method == "filter":
        masks = M.lattice.enumerate_by_filter()
    else:
        raise ValueError(f"unknown method {method!r}")
    return [Subsemimodule(M, m) for m in masks]


def _plus_sets(M: Semimodule, mask: int) -> list[int]:
    """For each m, the bitmask {m + n : n in N}."""
    idx = bitset.index_array(mask)
    sums = M.add[:, idx]
    out = []
    for row in sums.tolist():
        t = 0
        for v in row:
            t |= 1 << v
        out.append(t)
    return out


def subtractive_closure(M: Semimodule, N: Subsemimodule) -> Subsemimodule:
    """{m : m + x = y for some x, y in N}; the least k-subsemimodule above N."""
    mask = as_mask(N)
    plus = _plus_sets(M, mask)
    bar = 0
    for m, t in enumerate(plus):
        if t & mask:
            bar |= 1 << m
    out = Subsemimodule(M, bar)
    assert is_subtractive_subsemimodule(M, out), "subtractive closure is not subtractive"
    return out


def is_subtractive_subsemimodule(M: Semimodule, N: Subsemimodule) -> bool:
    """x in N and x + y in N imply y in N."""
    inside = bitset.to_array(as_mask(N), M.size)
    lands = inside[M.add[:, inside]].any(axis=1)
    return not (lands & ~inside).any()


def scalar_image(M: Semimodule, a: int, N: Subsemimodule) -> Subsemimodule:
    """The set a*N = {a*n : n in N} (already a subsemimodule)."""
    row = M.act_rows[a]
    img = 0
    for n in bitset.members(as_mask(N)):
        img |= 1 << row[n]
    return Subsemimodule(M, img)


def annihilator(M: Semimodule, N: Subsemimodule) -> Ideal:
    idx = bitset.index_array(as_mask(N))
    kills = (M.act[:, idx] == M.zero).all(axis=1)
    return Ideal(M.base, bitset.from_array(kills))


def colon_into(M: Semimodule, K: Subsemimodule, I: Ideal) -> Subsemimodule:
    """(K :_M I) = {m : r*m in K for every r in I}."""
    inK = bitset.to_array(as_mask(K), M.size)
    ridx = bitset.index_array(as_mask(I))
    ok = inK[M.act[ridx, :]].all(axis=0)
    out = Subsemimodule(M, bitset.from_array(ok))
    return out


def colon_ideal(M: Semimodule, N: Subsemimodule) -> Ideal:
    """(N :_R M) = {r : r*M is inside N}."""
    inN = bitset.to_array(as_mask(N), M.size)
    return Ideal(M.base, bitset.from_array(inN[M.act].all(axis=1)))


def sum_of(*subs: Subsemimodule) -> Subsemimodule:
    """N_1 + ... + N_t."""
    _check_parent(*subs)
    M = subs[0].parent
    acc = 1 << M.zero
    for s in subs:
        acc = M.lattice.join(acc, s.members)
    return Subsemimodule(M, acc)


def intersection(N: Subsemimodule, K: Subsemimodule) -> Subsemimodule:
    _check_parent(N, K)
    return Subsemimodule(N.parent, N.members & K.members)


def ideal_apply(I: Ideal, N: Subsemimodule) -> Subsemimodule:
    """IN: finite sums of products r*n with r in I, n in N."""
    M = N.parent
    if I.parent is not M.base:
        raise ParentMismatch(f"{I!r} is not an ideal of the base of {M.name}")
    prods = 0
    rows = M.act_rows
    ns = N.elements
    for r in I:
        row = rows[r]
        for n in ns:
            prods |= 1 << row[n]
    return closure(M, prods)


def ann_squared(M: Semimodule, N: Subsemimodule) -> Ideal:
    a = annihilator(M, N)
    return ideal_product(a, a)


def is_faithful(M: Semimodule) -> bool:
    return annihilator(M, whole_sub(M)).members == 1 << M.base.zero


def is_simple(M: Semimodule) -> bool:
    """Non-zero with no subsemimodules other than 0 and M."""
    if M.size == 1:
        return False
    return len(enumerate_subsemimodules(M)) == 2


def maximal_subsemimodules(M: Semimodule) -> list[Subsemimodule]:
    proper = [N for N in enumerate_subsemimodules(M) if N.members != M.full_mask]
    return [N for N in proper if not any(N < L for L in proper)]


# -- constructions ----------------------------------------------------------


def restrict(N: Subsemimodule, name: str | None = None) -> tuple[Semimodule, "Homomorphism"]:
    """N as a semimodule in its own right, with the inclusion into its parent.

    Elements of the new module are numbered by ascending index in the parent.
    """
    M = N.parent
    elems = N.elements
    pos = {x: i for i, x in enumerate(elems)}
    add = [[pos[M.add_rows[x][y]] for y in elems] for x in elems]
    act = [[pos[row[x]] for x in elems] for row in M.act_rows]
    sub = _trusted(M.base, len(elems), pos[M.zero], np.array(add), np.array(act), name or f"{M.name}|{bitset.to_list(N.members)}")
    return sub, Homomorphism(sub, M, tuple(elems))


def quotient(M: Semimodule, N: Subsemimodule, name: str | None = None) -> tuple[Semimodule, "Homomorphism"]:
    """Bourne quotient M/N and its projection.

    m ~ m' iff m + n1 = m' + n2 for some n1, n2 in N.  This relation is
    already a congruence, so no further closure is needed.  Classes are
    numbered by their least representative.
    """
    if N.parent is not M:
        raise ParentMismatch(f"{N!r} is not inside {M.name}")
    plus = _plus_sets(M, N.members)
    parent = list(range(M.size))

    def find(x: int) -> int:
        while parent[x] != x:
            parent[x] = parent[parent[x]]
            x = parent[x]
        return x

    for x in range(M.size):
        for y in range(x + 1, M.size):
            if plus[x] & plus[y]:
                rx, ry = find(x), find(y)
                if rx != ry:
                    parent[max(rx, ry)] = min(rx, ry)
    roots = sorted({find(x) for x in range(M.size)})
    cls = {r: i for i, r in enumerate(roots)}
    proj = [cls[find(x)] for x in range(M.size)]
    add = [[proj[M.add_rows[a][b]] for b in roots] for a in roots]
    act = [[proj[row[a]] for a in roots] for row in M.act_rows]
    Q = _trusted(M.base, len(roots), proj[M.zero], np.array(add), np.array(act), name or f"{M.name}/{bitset.to_list(N.members)}")
    return Q, Homomorphism(M, Q, tuple(proj))


def product_same_base(M1: Semimodule, M2: Semimodule, name: str | None = None) -> Semimodule:
    """M1 x M2 over the common base; (x, y) has index ``x * |M2| + y``."""
    if M1.base is not M2.base:
        raise ParentMismatch(f"{M1.name} and {M2.name} have different base semirings")
    m2 = M2.size
    add = (M1.add[:, None, :, None] * m2 + M2.add[None, :, None, :]).reshape(M1.size * m2, M1.size * m2)
    act = (M1.act[:, :, None] * m2 + M2.act[:, None, :]).reshape(M1.base.size, M1.size * m2)
    return _trusted(M1.base, M1.size * m2, M1.zero * m2 + M2.zero, add, act, name or f"{M1.name}+{M2.name}")


def external_product(M1: Semimodule, M2: Semimodule, name: str | None = None, base: Semiring | None = None) -> Semimodule:
    """M1 x M2 over R1 x R2 with (r1, r2)(x1, x2) = (r1 x1, r2 x2)."""
    R = base or product_semiring(M1.base, M2.base)
    if R.size != M1.base.size * M2.base.size:
        raise ParentMismatch("supplied base is not the product of the factor bases")
    m2 = M2.size
    add = (M1.add[:, None, :, None] * m2 + M2.add[None, :, None, :]).reshape(M1.size * m2, M1.size * m2)
    act = (M1.act[:, None, :, None] * m2 + M2.act[None, :, None, :]).reshape(R.size, M1.size * m2)
    return _trusted(R, M1.size * m2, M1.zero * m2 + M2.zero, add, act, name or f"{M1.name}x{M2.name}")


def external_product_many(mods: Sequence[Semimodule], name: str | None = None) -> Semimodule:
    """Left fold of :func:`external_product`; indices are mixed-radix."""
    out = mods[0]
    for m in mods[1:]:
        out = external_product(out, m)
    if name:
        out = _trusted(out.base, out.size, out.zero, out.add, out.act, name)
    return out


def product_subset(mods: Sequence[Semimodule], masks: Sequence[int]) -> int:
    """Bitmask of S_1 x ... x S_n inside the mixed-radix product."""
    acc = [0]
    for M, mask in zip(mods, masks):
        elems = bitset.to_list(mask)
        acc = [a * M.size + e for a in acc for e in elems]
    return bitset.from_iter(acc)


# -- homomorphisms ----------------------------------------------------------


@dataclass(frozen=True, eq=False)
class Homomorphism:
    source: Semimodule
    target: Semimodule
    map: tuple[int, ...]

    def __call__(self, x: int) -> int:
        return self.map[x]

    def __repr__(self) -> str:
        return f"Homomorphism({self.source.name} -> {self.target.name}, {list(self.map)})"


def validate_homomorphism(source: Semimodule, target: Semimodule, mapping: Sequence[int]) -> Homomorphism:
    if source.base is not target.base:
        raise ParentMismatch("homomorphisms need a common base semiring")
    f = tuple(int(v) for v in mapping)
    if len(f) != source.size or any(not 0 <= v < target.size for v in f):
        raise ShapeError(f"map must send 0..{source.size - 1} into 0..{target.size - 1}")
    sa, ta = source.add_rows, target.add_rows
    for x in range(source.size):
        for y in range(source.size):
            if f[sa[x][y]] != ta[f[x]][f[y]]:
                raise NotHomomorphism("f(x+y)=f(x)+f(y)", (x, y))
    for r, (srow, trow) in enumerate(zip(source.act_rows, target.act_rows)):
        for x in range(source.size):
            if f[srow[x]] != trow[f[x]]:
                raise NotHomomorphism("f(rx)=rf(x)", (r, x))
    return Homomorphism(source, target, f)


def identity(M: Semimodule) -> Homomorphism:
    return Homomorphism(M, M, tuple(range(M.size)))


def kernel(f: Homomorphism) -> Subsemimodule:
    z = f.target.zero
    return Subsemimodule(f.source, bitset.from_iter(x for x, v in enumerate(f.map) if v == z))


def image(f: Homomorphism, N: Subsemimodule | None = None) -> Subsemimodule:
    xs = range(f.source.size) if N is None else N
    return Subsemimodule(f.target, bitset.from_iter(f.map[x] for x in xs))


def preimage(f: Homomorphism, S: Subsemimodule) -> Subsemimodule:
    return Subsemimodule(f.source, bitset.from_iter(x for x, v in enumerate(f.map) if (S.members >> v) & 1))


def has_zero_kernel(f: Homomorphism) -> bool:
    return kernel(f).is_zero


def is_injective(f: Homomorphism) -> bool:
    return len(set(f.map)) == len(f.map)


def is_surjective(f: Homomorphism) -> bool:
    return len(set(f.map)) == f.target.size


def is_k_regular(f: Homomorphism) -> bool:
    """f(x1) = f(x2) implies x1 + k1 = x2 + k2 for some k1, k2 in Ker f."""
    plus = _plus_sets(f.source, kernel(f).members)
    by_value: dict[int, list[int]] = {}
    for x, v in enumerate(f.map):
        by_value.setdefault(v, []).append(x)
    for fibre in by_value.values():
        for i, x1 in enumerate(fibre):
            for x2 in fibre[i + 1 :]:
                if not plus[x1] & plus[x2]:
                    return False
    return True


def enumerate_homomorphisms(source: Semimodule, target: Semimodule) -> Iterator[Homomorphism]:
    """All homomorphisms source -> target, by backtracking with propagation.

    Fixing f(x) forces f on the subsemimodule generated by x and every
    already-assigned element, so conflicts surface as early as possible.
    """
    if source.base is not target.base:
        raise ParentMismatch("homomorphisms need a common base semiring")
    sa, ta = source.add_rows, target.add_rows
    sr, tr = source.act_rows, target.act_rows
    f = [-1] * source.size
    assigned: list[int] = []

    def assign(x: int, v: int) -> bool:
        stack = [(x, v)]
        while stack:
            x, v = stack.pop()
            if f[x] != -1:
                if f[x] != v:
                    return False
                continue
            f[x] = v
            assigned.append(x)
            for srow, trow in zip(sr, tr):
                stack.append((srow[x], trow[v]))
            sx, tv = sa[x], ta[v]
            for y in assigned:
                stack.append((sx[y], tv[f[y]]))
        return True

    def undo(mark: int) -> None:
        for y in assigned[mark:]:
            f[y] = -1
        del assigned[mark:]

    def search() -> Iterator[tuple[int, ...]]:
        try:
            x = f.index(-1)
        except ValueError:
            yield tuple(f)
            return
        for v in range(target.size):
            mark = len(assigned)
            if assign(x, v):
                yield from search()
            undo(mark)

    if not assign(source.zero, target.zero):
        return
    for m in search():
        yield Homomorphism(source, target, m)


def is_hopfian(M: Semimodule, max_size: int = 6) -> bool:
    """Every surjective endomorphism is injective.

    Endomorphisms are enumerated only when ``M.size <= max_size``; beyond
    that the answer is True because a surjection of a finite set onto
    itself is a bijection.
    """
    if M.size > max_size:
        return True
    return all(is_injective(f) for f in enumerate_homomorphisms(M, M) if is_surjective(f))
