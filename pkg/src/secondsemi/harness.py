"""Exhaustive checking of the second-subsemimodule propositions on finite
structures.

Every proposition is registered as a :class:`Theorem` made of

* ``premise``: structure-level hypotheses (e.g. "M is comultiplication"),
* ``instances``: every object the statement quantifies over,
* ``hypotheses``: the per-instance hypotheses,
* ``conclusion``: the claimed property.

A counterexample is an instance meeting premise and hypotheses whose
conclusion fails; it is emitted as a JSON-friendly witness that
:func:`replay` re-evaluates from scratch.
"""

from __future__ import annotations

import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field
from itertools import combinations_with_replacement, product
from typing import Callable, Iterable, Iterator, Sequence

from . import bitset
from .errors import ArityMismatch, SizeCapExceeded
from .semiring import (
    Ideal,
    Semiring,
    enumerate_ideals,
    is_maximal_ideal,
    is_prime_ideal,
    is_strong_ideal,
    is_subtractive_ideal,
    product_semiring,
    spec,
)
from .semimodule import (
    Homomorphism,
    Semimodule,
    Subsemimodule,
    annihilator,
    colon_into,
    enumerate_homomorphisms,
    enumerate_subsemimodules,
    external_product_many,
    has_zero_kernel,
    image,
    is_faithful,
    is_injective,
    is_k_regular,
    is_subsemimodule,
    is_subtractive_subsemimodule,
    is_surjective,
    preimage,
    product_same_base,
    product_subset,
    quotient,
    restrict,
    sum_of,
    validate_homomorphism,
    whole_sub,
    zero_sub,
)
from .second import (
    annihilated_parts,
    is_comultiplication,
    is_fully_coidempotent,
    is_minimal_subsemimodule,
    is_second,
    is_second_characterization,
    is_socle_subsemimodule,
    maximal_second_subsemimodules,
    second_subsemimodules,
    socle,
    socle_subsemimodules,
)

VERIFIED = "verified"
COUNTEREXAMPLE = "counterexample"
UNMET = "hypotheses-unmet"
SKIPPED = "skipped(size)"

DEFAULT_SIZE_CAP = 1296
DEFAULT_HOM_CAP = 10**6
# T2.10 is also run on triples of catalog modules whose product is this small
TRIPLE_PRODUCT_CAP = 64

Inst = dict


@dataclass
class Verdict:
    theorem: str
    structure: str
    status: str
    witness: dict | None = None
    variant: str | None = None
    detail: dict = field(default_factory=dict)
    elapsed: float = 0.0

    def to_dict(self, timings: bool = False) -> dict:
        out: dict = {"theorem": self.theorem}
        if self.variant:
            out["variant"] = self.variant
        out["structure"] = self.structure
        out["status"] = self.status
        if self.witness is not None:
            out["witness"] = self.witness
        if self.detail:
            out["detail"] = self.detail
        out["elapsed_ms"] = round(self.elapsed * 1000, 3) if timings else None
        return out


class Unmet(Exception):
    """Raised by a premise that does not hold; the message is the reason."""


class Ctx:
    """Inputs of one check plus a per-check memo."""

    def __init__(self, inputs: Sequence, variant: str | None, size_cap: int, hom_cap: int):
        self.inputs = tuple(inputs)
        self.variant = variant
        self.size_cap = size_cap
        self.hom_cap = hom_cap
        self._memo: dict = {}

    def memo(self, key, fn: Callable):
        if key not in self._memo:
            self._memo[key] = fn()
        return self._memo[key]

    @property
    def M(self) -> Semimodule:
        return self.inputs[0]

    def subs(self, M: Semimodule | None = None) -> list[Subsemimodule]:
        M = M or self.M
        return self.memo(("subs", id(M)), lambda: enumerate_subsemimodules(M))

    def seconds(self, M: Semimodule | None = None) -> list[Subsemimodule]:
        M = M or self.M
        return self.memo(("seconds", id(M)), lambda: second_subsemimodules(M))

    def sub(self, elements: Sequence[int], M: Semimodule | None = None) -> Subsemimodule:
        """Rebuild a subsemimodule from a witness list, refusing non-closed sets."""
        M = M or self.M
        mask = bitset.from_iter(elements)
        if not is_subsemimodule(M, mask):
            raise ValueError(f"{list(elements)} is not a subsemimodule of {M.name}")
        return Subsemimodule(M, mask)

    def ideal(self, elements: Sequence[int], R: Semiring | None = None) -> Ideal:
        R = R or self.M.base
        mask = bitset.from_iter(elements)
        if mask == 0 or not R.lattice.is_closed(mask) or mask >> R.size:
            raise ValueError(f"{list(elements)} is not an ideal of {R.name}")
        return Ideal(R, mask)

    def cap(self, size: int, what: str) -> None:
        if size > self.size_cap:
            raise SizeCapExceeded(f"{what} has {size} elements (cap {self.size_cap})")


@dataclass(frozen=True)
class Theorem:
    id: str
    kind: str  # module | semiring-pair | module-tuple | module-hom
    summary: str
    instances: Callable[[Ctx], Iterable[Inst]]
    conclusion: Callable[[Ctx, Inst], bool]
    hypotheses: Callable[[Ctx, Inst], bool] = lambda ctx, inst: True
    premise: Callable[[Ctx], None] = lambda ctx: None
    variants: tuple = (None,)


REGISTRY: dict[str, Theorem] = {}


def register(th: Theorem) -> Theorem:
    REGISTRY[th.id] = th
    return th


def L(s) -> list[int]:
    return s.elements


# -- shared predicates ------------------------------------------------------


def _p_second(ctx: Ctx, M: Semimodule, N: Subsemimodule, p: Ideal) -> bool:
    return is_second(M, N) and annihilator(M, N).members == p.members


def _module_p_second(Q: Semimodule, p_mask: int) -> bool:
    W = whole_sub(Q)
    return is_second(Q, W) and annihilator(Q, W).members == p_mask


def _require_comultiplication(ctx: Ctx) -> None:
    if not ctx.memo("comult", lambda: is_comultiplication(ctx.M)):
        raise Unmet(f"{ctx.M.name} is not a comultiplication semimodule")


def _require_fully_coidempotent(ctx: Ctx) -> None:
    if not ctx.memo("fci", lambda: is_fully_coidempotent(ctx.M)):
        raise Unmet(f"{ctx.M.name} is not fully coidempotent")


def _require_hom_cap(ctx: Ctx, source: Semimodule, target: Semimodule) -> None:
    if target.size ** source.size > ctx.hom_cap:
        raise SizeCapExceeded(f"{target.size}^{source.size} maps exceed the cap {ctx.hom_cap}")


# -- single-module propositions --------------------------------------------

register(Theorem(
    "P27.6", "module",
    "N is second iff N != 0 and aN inside K forces aN = 0 or N inside K",
    instances=lambda ctx: ({"N": L(N)} for N in ctx.subs()),
    conclusion=lambda ctx, i: is_second(ctx.M, ctx.sub(i["N"])) == is_second_characterization(ctx.M, ctx.sub(i["N"])),
))

register(Theorem(
    "R-min-sec", "module",
    "every minimal subsemimodule is second",
    instances=lambda ctx: ({"N": L(N)} for N in ctx.subs()),
    hypotheses=lambda ctx, i: is_minimal_subsemimodule(ctx.M, ctx.sub(i["N"])),
    conclusion=lambda ctx, i: is_second(ctx.M, ctx.sub(i["N"])),
))


def _ann_prime_k(ctx: Ctx, i: Inst) -> bool:
    a = annihilator(ctx.M, ctx.sub(i["N"]))
    return is_prime_ideal(ctx.M.base, a) and is_subtractive_ideal(ctx.M.base, a)


register(Theorem(
    "P2.2a", "module",
    "Ann(N) of a second N is a prime subtractive ideal",
    instances=lambda ctx: ({"N": L(N)} for N in ctx.subs()),
    hypotheses=lambda ctx, i: is_second(ctx.M, ctx.sub(i["N"])),
    conclusion=_ann_prime_k,
))

register(Theorem(
    "P2.2b", "module",
    "in a comultiplication semimodule, prime Ann(N) makes N second",
    premise=_require_comultiplication,
    instances=lambda ctx: ({"N": L(N)} for N in ctx.subs()),
    hypotheses=lambda ctx, i: is_prime_ideal(ctx.M.base, annihilator(ctx.M, ctx.sub(i["N"]))),
    conclusion=lambda ctx, i: is_second(ctx.M, ctx.sub(i["N"])),
))


def _t32_hyp(ctx: Ctx, i: Inst) -> bool:
    R = ctx.M.base
    P = ctx.ideal(i["P"])
    if P.members == R.full_mask:
        return False
    ann_m = annihilator(ctx.M, whole_sub(ctx.M))
    return (
        is_prime_ideal(R, P)
        and is_subtractive_ideal(R, P)
        and is_strong_ideal(R, P)
        and bitset.is_subset(ann_m.members, P.members)
    )


register(Theorem(
    "Pt3.2", "module",
    "(0 :_M P) is second for a strong prime k-ideal P containing Ann(M), M comultiplication",
    premise=_require_comultiplication,
    instances=lambda ctx: ({"P": L(P)} for P in enumerate_ideals(ctx.M.base)),
    hypotheses=_t32_hyp,
    conclusion=lambda ctx, i: is_second(ctx.M, colon_into(ctx.M, zero_sub(ctx.M), ctx.ideal(i["P"]))),
))


def _p2851_instances(ctx: Ctx) -> Iterator[Inst]:
    subs = ctx.subs()
    max_t = 3 if len(subs) <= 24 else 2
    for S in ctx.seconds():
        for t in range(1, max_t + 1):
            for family in combinations_with_replacement(subs, t):
                yield {"S": L(S), "N": [L(N) for N in family]}


def _p2851_concl(ctx: Ctx, i: Inst) -> bool:
    S = ctx.sub(i["S"])
    family = [ctx.sub(n) for n in i["N"]]
    in_sum = S <= sum_of(*family)
    in_one = any(S <= N for N in family)
    return in_sum == in_one


register(Theorem(
    "P28.51", "module",
    "a second S of a comultiplication M lies in a sum of N_i iff it lies in some N_j",
    premise=_require_comultiplication,
    instances=_p2851_instances,
    hypotheses=lambda ctx, i: is_second(ctx.M, ctx.sub(i["S"])),
    conclusion=_p2851_concl,
))


def _c28_hyp(ctx: Ctx, i: Inst) -> bool:
    N, K = ctx.sub(i["N"]), ctx.sub(i["K"])
    if not (is_subtractive_subsemimodule(ctx.M, N) and K <= N):
        return False
    sub, inc = restrict(N)
    pos = {x: j for j, x in enumerate(inc.map)}
    return is_second(sub, Subsemimodule(sub, bitset.from_iter(pos[x] for x in K)))


register(Theorem(
    "C2.8", "module",
    "K second in a subtractive N (K inside N) is second in M",
    instances=lambda ctx: (
        {"N": L(N), "K": L(K)} for N in ctx.subs() for K in ctx.subs() if K <= N
    ),
    hypotheses=_c28_hyp,
    conclusion=lambda ctx, i: is_second(ctx.M, ctx.sub(i["K"])),
))

register(Theorem(
    "Pdf2.1", "module",
    "maximal Ann(N) makes N second",
    instances=lambda ctx: ({"N": L(N)} for N in ctx.subs()),
    hypotheses=lambda ctx, i: is_maximal_ideal(ctx.M.base, annihilator(ctx.M, ctx.sub(i["N"]))),
    conclusion=lambda ctx, i: is_second(ctx.M, ctx.sub(i["N"])),
))


def _p_pairs(ctx: Ctx) -> Iterator[Inst]:
    for p in ctx.memo("spec", lambda: spec(ctx.M.base)):
        ps = [N for N in ctx.seconds() if annihilator(ctx.M, N).members == p.members]
        for a, b in combinations_with_replacement(ps, 2):
            yield {"p": L(p), "N": L(a), "K": L(b)}


def _p_pair_hyp(ctx: Ctx, i: Inst) -> bool:
    p = ctx.ideal(i["p"])
    return is_prime_ideal(ctx.M.base, p) and all(
        _p_second(ctx, ctx.M, ctx.sub(i[k]), p) for k in ("N", "K")
    )


register(Theorem(
    "Pdf2.9a", "module",
    "a sum of p-second subsemimodules is p-second",
    instances=_p_pairs,
    hypotheses=_p_pair_hyp,
    conclusion=lambda ctx, i: _p_second(ctx, ctx.M, sum_of(ctx.sub(i["N"]), ctx.sub(i["K"])), ctx.ideal(i["p"])),
))


def _p_product_concl(ctx: Ctx, i: Inst) -> bool:
    N, K = ctx.sub(i["N"]), ctx.sub(i["K"])
    ctx.cap(len(N) * len(K), "product semimodule")
    P = product_same_base(restrict(N)[0], restrict(K)[0])
    return _module_p_second(P, bitset.from_iter(i["p"]))


register(Theorem(
    "Pdf2.9b", "module",
    "a product of p-second semimodules is p-second",
    instances=_p_pairs,
    hypotheses=_p_pair_hyp,
    conclusion=_p_product_concl,
))


def _quotient_of_sub(N: Subsemimodule, L_: Subsemimodule) -> Semimodule:
    sub, inc = restrict(N)
    pos = {x: j for j, x in enumerate(inc.map)}
    Q, _ = quotient(sub, Subsemimodule(sub, bitset.from_iter(pos[x] for x in L_)))
    return Q


def _p_quot_instances(ctx: Ctx) -> Iterator[Inst]:
    for p in ctx.memo("spec", lambda: spec(ctx.M.base)):
        for N in ctx.seconds():
            if annihilator(ctx.M, N).members != p.members:
                continue
            for L_ in ctx.subs():
                if L_ <= N:
                    yield {"p": L(p), "N": L(N), "L": L(L_)}


def _p_quot_hyp(ctx: Ctx, i: Inst) -> bool:
    p = ctx.ideal(i["p"])
    N, L_ = ctx.sub(i["N"]), ctx.sub(i["L"])
    if not (is_prime_ideal(ctx.M.base, p) and _p_second(ctx, ctx.M, N, p) and L_ <= N):
        return False
    return _quotient_of_sub(N, L_).size > 1


register(Theorem(
    "Pdf2.9c", "module",
    "a non-zero (Bourne) quotient of a p-second semimodule is p-second",
    instances=_p_quot_instances,
    hypotheses=_p_quot_hyp,
    conclusion=lambda ctx, i: _module_p_second(
        _quotient_of_sub(ctx.sub(i["N"]), ctx.sub(i["L"])), bitset.from_iter(i["p"])
    ),
))


def _all_nonzero_second(ctx: Ctx) -> None:
    for N in ctx.subs():
        if not N.is_zero and not is_second(ctx.M, N):
            raise Unmet(f"non-zero subsemimodule {L(N)} is not second")


def _l314_instances(ctx: Ctx) -> Iterator[Inst]:
    ideals = enumerate_ideals(ctx.M.base)
    for K in ctx.subs():
        for I in ideals:
            yield {"clause": "square", "K": L(K), "I": L(I)}
        for A, B in combinations_with_replacement(ideals, 2):
            yield {"clause": "comparable", "K": L(K), "A": L(A), "B": L(B)}


def _l314_concl(ctx: Ctx, i: Inst) -> bool:
    from .semiring import ideal_product

    K = ctx.sub(i["K"])
    if i["clause"] == "square":
        I = ctx.ideal(i["I"])
        return colon_into(ctx.M, K, I).members == colon_into(ctx.M, K, ideal_product(I, I)).members
    a = colon_into(ctx.M, K, ctx.ideal(i["A"]))
    b = colon_into(ctx.M, K, ctx.ideal(i["B"]))
    return a <= b or b <= a


register(Theorem(
    "P8l3.14", "module",
    "if every non-zero subsemimodule is second: (K:I) = (K:I^2) and (K:A), (K:B) are comparable",
    premise=_all_nonzero_second,
    instances=_l314_instances,
    conclusion=_l314_concl,
))


def _t25a_concl(ctx: Ctx, i: Inst) -> bool:
    return ctx.sub(i["N"]).members in annihilated_parts(ctx.M)


register(Theorem(
    "Pt2.5a", "module",
    "a fully coidempotent semimodule is comultiplication",
    premise=_require_fully_coidempotent,
    instances=lambda ctx: ({"N": L(N)} for N in ctx.subs()),
    conclusion=_t25a_concl,
))


def _t25b_concl(ctx: Ctx, i: Inst) -> bool:
    N = ctx.sub(i["N"])
    if i["part"] == "subsemimodule":
        return is_fully_coidempotent(restrict(N)[0])
    return is_fully_coidempotent(quotient(ctx.M, N)[0])


register(Theorem(
    "Pt2.5b", "module",
    "subsemimodules and (Bourne) quotients of a fully coidempotent semimodule are fully coidempotent",
    premise=_require_fully_coidempotent,
    instances=lambda ctx: (
        {"part": part, "N": L(N)} for N in ctx.subs() for part in ("subsemimodule", "quotient")
    ),
    conclusion=_t25b_concl,
))


def _t25c_premise(ctx: Ctx) -> None:
    _require_fully_coidempotent(ctx)
    _require_hom_cap(ctx, ctx.M, ctx.M)


def _hom(ctx: Ctx, mapping: Sequence[int], source: Semimodule, target: Semimodule) -> Homomorphism:
    return validate_homomorphism(source, target, mapping)


register(Theorem(
    "Pt2.5c", "module",
    "a fully coidempotent semimodule is Hopfian",
    premise=_t25c_premise,
    instances=lambda ctx: ({"map": list(f.map)} for f in enumerate_homomorphisms(ctx.M, ctx.M)),
    hypotheses=lambda ctx, i: is_surjective(_hom(ctx, i["map"], ctx.M, ctx.M)),
    conclusion=lambda ctx, i: is_injective(_hom(ctx, i["map"], ctx.M, ctx.M)),
))

register(Theorem(
    "T8lfff3.14", "module",
    "in a fully coidempotent semimodule every second subsemimodule is minimal",
    premise=_require_fully_coidempotent,
    instances=lambda ctx: ({"N": L(N)} for N in ctx.subs()),
    hypotheses=lambda ctx, i: is_second(ctx.M, ctx.sub(i["N"])),
    conclusion=lambda ctx, i: is_minimal_subsemimodule(ctx.M, ctx.sub(i["N"])),
))


def _l29_instances(ctx: Ctx) -> Iterator[Inst]:
    # the annihilator is informational; replay recomputes it
    yield {"M": L(whole_sub(ctx.M)), "annihilator": L(annihilator(ctx.M, whole_sub(ctx.M)))}


def _pl29_concl(ctx: Ctx, i: Inst) -> bool:
    return is_maximal_ideal(ctx.M.base, annihilator(ctx.M, whole_sub(ctx.M)))


register(Theorem(
    "Pl2.9", "module",
    "a (finitely generated) second semimodule has maximal annihilator",
    instances=_l29_instances,
    hypotheses=lambda ctx, i: ctx.sub(i["M"]).members == ctx.M.full_mask and is_second(ctx.M, whole_sub(ctx.M)),
    conclusion=_pl29_concl,
))


def _require_some_second(ctx: Ctx) -> None:
    if not ctx.seconds():
        raise Unmet(f"{ctx.M.name} has no second subsemimodule")


def _t38_instances(ctx: Ctx) -> Iterator[Inst]:
    socles = socle_subsemimodules(ctx.M)
    # the smallest certificate: one socle subsemimodule no second contains, if any
    for N in socles:
        if not any(N <= S for S in ctx.seconds()):
            yield {"socle_subsemimodules": [L(N)]}
            return
    yield {"socle_subsemimodules": [L(N) for N in socles]}


def _t38_hyp(ctx: Ctx, i: Inst) -> bool:
    return all(is_socle_subsemimodule(ctx.M, ctx.sub(n)) for n in i["socle_subsemimodules"])


def _t38_concl(ctx: Ctx, i: Inst) -> bool:
    listed = [ctx.sub(n) for n in i["socle_subsemimodules"]]
    return any(all(N <= S for N in listed) for S in second_subsemimodules(ctx.M))


register(Theorem(
    "Tt3.8", "module",
    "some second subsemimodule contains every socle subsemimodule (literal reading)",
    premise=_require_some_second,
    instances=_t38_instances,
    hypotheses=_t38_hyp,
    conclusion=_t38_concl,
))


def _t38alt_instances(ctx: Ctx) -> Iterator[Inst]:
    for S in ctx.seconds():
        yield {"second": L(S)}
    for N in socle_subsemimodules(ctx.M):
        yield {"socle_subsemimodule": L(N)}


def _t38alt_hyp(ctx: Ctx, i: Inst) -> bool:
    if "second" in i:
        return is_second(ctx.M, ctx.sub(i["second"]))
    return is_socle_subsemimodule(ctx.M, ctx.sub(i["socle_subsemimodule"]))


def _t38alt_concl(ctx: Ctx, i: Inst) -> bool:
    total = socle(ctx.M, whole_sub(ctx.M))
    return ctx.sub(i.get("second") or i["socle_subsemimodule"]) <= total


register(Theorem(
    "Tt3.8-alt", "module",
    "the sum of all second subsemimodules contains every second and every socle subsemimodule",
    premise=_require_some_second,
    instances=_t38alt_instances,
    hypotheses=_t38alt_hyp,
    conclusion=_t38alt_concl,
))


def _finite_maximal_seconds(ctx: Ctx, K: Subsemimodule) -> bool:
    found = maximal_second_subsemimodules(ctx.M, K)
    # a finite list of distinct second subsemimodules inside K, no more than the lattice holds
    distinct = {N.members for N in found}
    return (
        len(distinct) == len(found) <= len(ctx.subs())
        and all(is_second(ctx.M, N) and N <= K for N in found)
    )


register(Theorem(
    "Tt3.6", "module",
    "every non-zero subsemimodule has finitely many maximal second subsemimodules",
    instances=lambda ctx: ({"K": L(K)} for K in ctx.subs() if not K.is_zero),
    hypotheses=lambda ctx, i: not ctx.sub(i["K"]).is_zero,
    conclusion=lambda ctx, i: _finite_maximal_seconds(ctx, ctx.sub(i["K"])),
))

register(Theorem(
    "Cc3.7", "module",
    "the semimodule has finitely many maximal second subsemimodules",
    instances=lambda ctx: iter([{"K": L(whole_sub(ctx.M))}]),
    hypotheses=lambda ctx, i: ctx.sub(i["K"]).members == ctx.M.full_mask,
    conclusion=lambda ctx, i: _finite_maximal_seconds(ctx, ctx.sub(i["K"])),
))


# -- homomorphisms ---------------------------------------------------------

SUBTRACTIVE_VARIANTS = ("M-all-subtractive", "subsemimodule-subtractive")


def _hom_premise(ctx: Ctx) -> None:
    M, Mp = ctx.inputs
    _require_hom_cap(ctx, M, Mp)
    if ctx.variant == "M-all-subtractive":
        bad = [N for N in ctx.subs(M) if not is_subtractive_subsemimodule(M, N)]
        if bad:
            raise Unmet(f"{L(bad[0])} is not a subtractive subsemimodule of {M.name}")


def _zero_kernel_homs(ctx: Ctx) -> list[Homomorphism]:
    M, Mp = ctx.inputs
    return ctx.memo("homs", lambda: [f for f in enumerate_homomorphisms(M, Mp) if has_zero_kernel(f)])


def _p27a_instances(ctx: Ctx) -> Iterator[Inst]:
    for f in _zero_kernel_homs(ctx):
        for S in ctx.seconds(ctx.inputs[0]):
            yield {"map": list(f.map), "S": L(S)}


def _p27a_hyp(ctx: Ctx, i: Inst) -> bool:
    M, Mp = ctx.inputs
    f = _hom(ctx, i["map"], M, Mp)
    S = ctx.sub(i["S"], M)
    if ctx.variant == "subsemimodule-subtractive" and not is_subtractive_subsemimodule(M, S):
        return False
    return has_zero_kernel(f) and is_k_regular(f) and is_second(M, S)


register(Theorem(
    "P2.7a", "module-hom",
    "f with zero kernel and k-regular sends a second S to a second f(S)",
    premise=_hom_premise,
    instances=_p27a_instances,
    hypotheses=_p27a_hyp,
    conclusion=lambda ctx, i: is_second(
        ctx.inputs[1], image(_hom(ctx, i["map"], *ctx.inputs), ctx.sub(i["S"], ctx.inputs[0]))
    ),
    variants=SUBTRACTIVE_VARIANTS,
))


def _p27b_instances(ctx: Ctx) -> Iterator[Inst]:
    M, Mp = ctx.inputs
    for f in _zero_kernel_homs(ctx):
        fm = image(f)
        for S in ctx.seconds(Mp):
            if S <= fm:
                yield {"map": list(f.map), "S'": L(S)}


def _p27b_hyp(ctx: Ctx, i: Inst) -> bool:
    M, Mp = ctx.inputs
    f = _hom(ctx, i["map"], M, Mp)
    Sp = ctx.sub(i["S'"], Mp)
    if not (has_zero_kernel(f) and Sp <= image(f) and is_second(Mp, Sp)):
        return False
    if ctx.variant == "subsemimodule-subtractive":
        return is_subtractive_subsemimodule(M, preimage(f, Sp))
    return True


register(Theorem(
    "P2.7b", "module-hom",
    "f with zero kernel pulls a second S' inside f(M) back to a second f^-1(S')",
    premise=_hom_premise,
    instances=_p27b_instances,
    hypotheses=_p27b_hyp,
    conclusion=lambda ctx, i: is_second(
        ctx.inputs[0], preimage(_hom(ctx, i["map"], *ctx.inputs), ctx.sub(i["S'"], ctx.inputs[1]))
    ),
    variants=SUBTRACTIVE_VARIANTS,
))


# -- semiring pairs --------------------------------------------------------


def _ring_pair(ctx: Ctx) -> Semiring:
    R1, R2 = ctx.inputs
    ctx.cap(R1.size * R2.size, "product semiring")
    return ctx.memo("ring", lambda: product_semiring(R1, R2))


def _embed_ideal(ctx: Ctx, J1: int, J2: int) -> Ideal:
    R1, R2 = ctx.inputs
    return Ideal(_ring_pair(ctx), product_subset_rings(R1, R2, J1, J2))


def product_subset_rings(R1: Semiring, R2: Semiring, J1: int, J2: int) -> int:
    return bitset.from_iter(a * R2.size + b for a in bitset.members(J1) for b in bitset.members(J2))


def _l298_instances(ctx: Ctx) -> Iterator[Inst]:
    R1, R2 = ctx.inputs
    _ring_pair(ctx)
    for side, R in ((1, R1), (2, R2)):
        for J in enumerate_ideals(R):
            yield {"side": side, "J": L(J)}


def _l298_concl(ctx: Ctx, i: Inst) -> bool:
    R1, R2 = ctx.inputs
    if i["side"] == 1:
        J = ctx.ideal(i["J"], R1)
        big = _embed_ideal(ctx, J.members, R2.full_mask)
        return is_prime_ideal(R1, J) == is_prime_ideal(big.parent, big)
    J = ctx.ideal(i["J"], R2)
    big = _embed_ideal(ctx, R1.full_mask, J.members)
    return is_prime_ideal(R2, J) == is_prime_ideal(big.parent, big)


register(Theorem(
    "L2.98", "semiring-pair",
    "J1 is prime in R1 iff J1 x R2 is prime in R1 x R2 (and symmetrically)",
    instances=_l298_instances,
    conclusion=_l298_concl,
))


def _t2998_instances(ctx: Ctx) -> Iterator[Inst]:
    R1, R2 = ctx.inputs
    _ring_pair(ctx)
    for J1 in enumerate_ideals(R1):
        for J2 in enumerate_ideals(R2):
            yield {"J1": L(J1), "J2": L(J2)}


def _t2998_concl(ctx: Ctx, i: Inst) -> bool:
    R1, R2 = ctx.inputs
    J1, J2 = ctx.ideal(i["J1"], R1), ctx.ideal(i["J2"], R2)
    J = _embed_ideal(ctx, J1.members, J2.members)
    lhs = is_prime_ideal(J.parent, J)
    rhs = (J2.members == R2.full_mask and is_prime_ideal(R1, J1)) or (
        J1.members == R1.full_mask and is_prime_ideal(R2, J2)
    )
    return lhs == rhs


register(Theorem(
    "T2.998", "semiring-pair",
    "J1 x J2 is prime iff it is P x R2 or R1 x P with P prime",
    instances=_t2998_instances,
    conclusion=_t2998_concl,
))


# -- module tuples ---------------------------------------------------------

FAITHFUL_VARIANTS = ("faithful", "faithfulness-dropped")


def _tuple_premise(ctx: Ctx) -> None:
    mods = ctx.inputs
    if len(mods) < 2:
        raise ArityMismatch("product theorems need at least two semimodules")
    size = 1
    for M in mods:
        size *= max(M.size, M.base.size)
    ctx.cap(size, "product semimodule")
    if ctx.variant != "faithfulness-dropped":
        for M in mods:
            if not is_faithful(M):
                raise Unmet(f"{M.name} is not faithful")


def _big(ctx: Ctx) -> Semimodule:
    return ctx.memo("big", lambda: external_product_many(ctx.inputs))


def _tuple_instances(ctx: Ctx) -> Iterator[Inst]:
    for combo in product(*(ctx.subs(M) for M in ctx.inputs)):
        yield {"S": [L(S) for S in combo]}


def _tuple_concl(ctx: Ctx, i: Inst) -> bool:
    mods = ctx.inputs
    parts = [ctx.sub(s, M) for s, M in zip(i["S"], mods)]
    big = _big(ctx)
    lhs = is_second(big, Subsemimodule(big, product_subset(mods, [S.members for S in parts])))
    nonzero = [j for j, S in enumerate(parts) if not S.is_zero]
    rhs = len(nonzero) == 1 and is_second(mods[nonzero[0]], parts[nonzero[0]])
    return lhs == rhs


register(Theorem(
    "L2.9", "module-tuple",
    "S1 x S2 is second iff one factor is second and the other is zero (faithful factors)",
    premise=_tuple_premise,
    instances=_tuple_instances,
    conclusion=_tuple_concl,
))

register(Theorem(
    "T2.10", "module-tuple",
    "S1 x ... x Sn is second iff exactly one factor is non-zero and it is second",
    premise=_tuple_premise,
    instances=_tuple_instances,
    conclusion=_tuple_concl,
    variants=FAITHFUL_VARIANTS,
))


THEOREM_IDS = (
    "P27.6", "R-min-sec", "P2.2a", "P2.2b", "Pt3.2", "P28.51", "P2.7a", "P2.7b", "C2.8",
    "Pdf2.1", "Pdf2.9a", "Pdf2.9b", "Pdf2.9c", "P8l3.14", "Pt2.5a", "Pt2.5b", "Pt2.5c",
    "T8lfff3.14", "L2.98", "T2.998", "L2.9", "T2.10", "Pl2.9", "Tt3.8", "Tt3.6", "Cc3.7",
)
ALL_IDS = THEOREM_IDS + ("Tt3.8-alt",)
assert set(REGISTRY) == set(ALL_IDS), set(REGISTRY) ^ set(ALL_IDS)


# -- running ---------------------------------------------------------------


def structure_name(th: Theorem, inputs: Sequence) -> str:
    if th.kind == "module-hom":
        return f"{inputs[0].name} -> {inputs[1].name}"
    return " x ".join(s.name for s in inputs)


def _check_arity(th: Theorem, inputs: Sequence) -> None:
    ok = {
        "module": len(inputs) == 1 and isinstance(inputs[0], Semimodule),
        "semiring-pair": len(inputs) == 2 and all(isinstance(s, Semiring) for s in inputs),
        "module-tuple": len(inputs) >= 2 and all(isinstance(s, Semimodule) for s in inputs),
        "module-hom": len(inputs) == 2
        and all(isinstance(s, Semimodule) for s in inputs)
        and inputs[0].base is inputs[1].base,
    }[th.kind]
    if not ok:
        raise ArityMismatch(f"{th.id} expects {th.kind} input, got {[getattr(s, 'name', s) for s in inputs]}")


def check(
    theorem: str,
    inputs: Sequence,
    variant: str | None = None,
    size_cap: int = DEFAULT_SIZE_CAP,
    hom_cap: int = DEFAULT_HOM_CAP,
) -> Verdict:
    """Exhaustively check one proposition on one input tuple."""
    th = REGISTRY[theorem]
    if variant is None:
        variant = th.variants[0]
    elif variant not in th.variants:
        raise ValueError(f"{theorem} has no variant {variant!r}")
    inputs = tuple(inputs)
    _check_arity(th, inputs)
    start = time.perf_counter()
    v = Verdict(th.id, structure_name(th, inputs), VERIFIED, variant=variant)
    ctx = Ctx(inputs, variant, size_cap, hom_cap)
    for s in inputs:
        if s.size > size_cap:
            v.status, v.detail = SKIPPED, {"reason": f"{s.name} has {s.size} elements (cap {size_cap})"}
            v.elapsed = time.perf_counter() - start
            return v
    try:
        th.premise(ctx)
        checked = 0
        for inst in th.instances(ctx):
            if not th.hypotheses(ctx, inst):
                continue
            checked += 1
            if not th.conclusion(ctx, inst):
                v.status, v.witness = COUNTEREXAMPLE, inst
                break
        v.detail = {"instances": checked}
        if checked == 0:
            v.status, v.detail = UNMET, {"reason": "no instance satisfies the hypotheses"}
    except Unmet as exc:
        v.status, v.detail = UNMET, {"reason": str(exc)}
    except SizeCapExceeded as exc:
        v.status, v.detail = SKIPPED, {"reason": str(exc)}
    v.elapsed = time.perf_counter() - start
    return v


def replay(verdict: Verdict | dict, inputs: Sequence, size_cap: int = DEFAULT_SIZE_CAP, hom_cap: int = DEFAULT_HOM_CAP) -> bool:
    """True iff the verdict's witness meets every hypothesis and breaks the conclusion."""
    if isinstance(verdict, Verdict):
        verdict = verdict.to_dict()
    th = REGISTRY[verdict["theorem"]]
    witness = verdict.get("witness")
    if witness is None:
        return False
    ctx = Ctx(inputs, verdict.get("variant") or th.variants[0], size_cap, hom_cap)
    try:
        th.premise(ctx)
        return th.hypotheses(ctx, witness) and not th.conclusion(ctx, witness)
    except (Unmet, ValueError, KeyError):
        return False


# -- catalogs --------------------------------------------------------------


def applicable_inputs(th: Theorem, catalog: Sequence) -> list[tuple]:
    rings = [s for s in catalog if isinstance(s, Semiring)]
    mods = [s for s in catalog if isinstance(s, Semimodule)]
    if th.kind == "module":
        return [(M,) for M in mods]
    if th.kind == "semiring-pair":
        return list(combinations_with_replacement(rings, 2))
    if th.kind == "module-hom":
        return [(M, N) for M in mods for N in mods if M.base is N.base]
    out = list(combinations_with_replacement(mods, 2))
    if th.id == "T2.10":
        for trip in combinations_with_replacement(mods, 3):
            size = 1
            for M in trip:
                size *= max(M.size, M.base.size)
            if size <= TRIPLE_PRODUCT_CAP:
                out.append(trip)
    return out


def _work(item: tuple) -> Verdict:
    tid, variant, inputs, size_cap, hom_cap = item
    return check(tid, inputs, variant, size_cap, hom_cap)


def run_catalog(
    theorems: Sequence[str],
    catalog: Sequence,
    size_cap: int = DEFAULT_SIZE_CAP,
    hom_cap: int = DEFAULT_HOM_CAP,
    jobs: int = 1,
) -> list[Verdict]:
    """Every applicable (theorem, variant, inputs) triple, in a fixed order."""
    items = []
    for tid in theorems:
        th = REGISTRY[tid]
        for variant in th.variants:
            for inputs in applicable_inputs(th, catalog):
                items.append((tid, variant, inputs, size_cap, hom_cap))
    if jobs > 1 and len(items) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_work, items, chunksize=4))
    return [_work(it) for it in items]


def summarize(verdicts: Iterable[Verdict]) -> dict[str, dict[str, int]]:
    out: dict[str, dict[str, int]] = {}
    for v in verdicts:
        key = v.theorem if not v.variant else f"{v.theorem}[{v.variant}]"
        row = out.setdefault(key, {})
        row[v.status] = row.get(v.status, 0) + 1
    return out
