"""Second, prime, minimal and coidempotent subsemimodules; comultiplication
semimodules; socles and maximal second subsemimodules."""

from __future__ import annotations

import numpy as np

from . import bitset
from .errors import NotProper
from .semiring import Ideal, enumerate_ideals, as_mask
from .semimodule import (
    Semimodule,
    Subsemimodule,
    ann_squared,
    annihilator,
    colon_ideal,
    colon_into,
    enumerate_subsemimodules,
    is_subtractive_subsemimodule,
    scalar_image,
    sum_of,
    zero_sub,
)


def is_second(M: Semimodule, N: Subsemimodule) -> bool:
    """N != 0 and, for every scalar a, a*N is either N or 0."""
    mask = as_mask(N)
    if mask == 1 << M.zero:
        return False
    idx = bitset.index_array(mask)
    img = np.sort(M.act[:, idx], axis=1)
    # a*N lies inside N, so a*N = N exactly when the row has |N| distinct values
    distinct = 1 + (np.diff(img, axis=1) != 0).sum(axis=1)
    all_zero = (img[:, 0] == M.zero) & (img[:, -1] == M.zero)
    return bool(((distinct == len(idx)) | all_zero).all())


def is_second_characterization(M: Semimodule, N: Subsemimodule) -> bool:
    """N != 0, and a*N inside K forces a*N = 0 or N inside K, for every
    scalar a and every subsemimodule K."""
    mask = as_mask(N)
    if mask == 1 << M.zero:
        return False
    subs = [K.members for K in enumerate_subsemimodules(M)]
    for a in range(M.base.size):
        aN = scalar_image(M, a, N).members
        if aN == 1 << M.zero:
            continue
        for K in subs:
            if bitset.is_subset(aN, K) and not bitset.is_subset(mask, K):
                return False
    return True


def second_subsemimodules(M: Semimodule) -> list[Subsemimodule]:
    cached = M.__dict__.get("_seconds")
    if cached is None:
        cached = [N for N in enumerate_subsemimodules(M) if is_second(M, N)]
        M.__dict__["_seconds"] = cached
    return list(cached)


def is_prime_subsemimodule(M: Semimodule, N: Subsemimodule) -> bool:
    """r*x in N implies r*M inside N or x in N (N proper)."""
    mask = as_mask(N)
    if mask == M.full_mask:
        raise NotProper(f"prime subsemimodules are proper; got all of {M.name}")
    colon = colon_ideal(M, N).members
    for r, row in enumerate(M.act_rows):
        if (colon >> r) & 1:
            continue
        for x in range(M.size):
            if (mask >> row[x]) & 1 and not (mask >> x) & 1:
                return False
    return True


def is_minimal_subsemimodule(M: Semimodule, N: Subsemimodule) -> bool:
    mask = as_mask(N)
    z = 1 << M.zero
    if mask == z:
        return False
    return not any(K.members != z and K.members != mask and bitset.is_subset(K.members, mask) for K in enumerate_subsemimodules(M))


def minimal_subsemimodules(M: Semimodule) -> list[Subsemimodule]:
    return [N for N in enumerate_subsemimodules(M) if is_minimal_subsemimodule(M, N)]


def annihilated_parts(M: Semimodule) -> dict[int, Ideal]:
    """Map each distinct (0 :_M I) bitmask to the first ideal I realising it."""
    out: dict[int, Ideal] = {}
    z = zero_sub(M)
    for I in enumerate_ideals(M.base):
        out.setdefault(colon_into(M, z, I).members, I)
    return out


def is_comultiplication(M: Semimodule) -> bool:
    reps = annihilated_parts(M)
    return all(N.members in reps for N in enumerate_subsemimodules(M))


def is_k_comultiplication(M: Semimodule) -> bool:
    reps = annihilated_parts(M)
    return all(N.members in reps for N in enumerate_subsemimodules(M) if is_subtractive_subsemimodule(M, N))


def comultiplication_witness(M: Semimodule) -> Subsemimodule | None:
    """First subsemimodule not of the form (0 :_M I), or None."""
    reps = annihilated_parts(M)
    for N in enumerate_subsemimodules(M):
        if N.members not in reps:
            return N
    return None


def is_coidempotent(M: Semimodule, N: Subsemimodule) -> bool:
    """N = (0 :_M Ann(N)^2)."""
    return colon_into(M, zero_sub(M), ann_squared(M, N)).members == as_mask(N)


def is_fully_coidempotent(M: Semimodule) -> bool:
    return all(is_coidempotent(M, N) for N in enumerate_subsemimodules(M))


def socle(M: Semimodule, N: Subsemimodule) -> Subsemimodule:
    """sec(N): the sum of the second subsemimodules inside N, or 0 if none."""
    mask = as_mask(N)
    inside = [S for S in second_subsemimodules(M) if bitset.is_subset(S.members, mask)]
    if not inside:
        return zero_sub(M)
    return sum_of(*inside)


def is_socle_subsemimodule(M: Semimodule, N: Subsemimodule) -> bool:
    mask = as_mask(N)
    return mask != 1 << M.zero and socle(M, N).members == mask


def socle_subsemimodules(M: Semimodule) -> list[Subsemimodule]:
    return [N for N in enumerate_subsemimodules(M) if is_socle_subsemimodule(M, N)]


def maximal_second_subsemimodules(M: Semimodule, K: Subsemimodule) -> list[Subsemimodule]:
    """Second N inside K with no second L such that N < L < K (both strict)."""
    k = as_mask(K)
    seconds = [S.members for S in second_subsemimodules(M)]
    inside = [s for s in seconds if bitset.is_subset(s, k)]
    out = []
    for n in inside:
        between = any(n != l and l != k and bitset.is_subset(n, l) for l in inside)
        if not between:
            out.append(Subsemimodule(M, n))
    return out
