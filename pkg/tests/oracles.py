"""Brute-force reference implementations built on plain Python sets.

None of these touch the package's bitsets, lattices or numpy scans, so
they serve as independent checks on the library.
"""

from itertools import combinations, product


def tables(s):
    return s.add.tolist(), (s.mul.tolist() if hasattr(s, "mul") else s.act.tolist())


def semiring_violations(size, zero, one, add, mul):
    bad = set()
    E = range(size)
    if zero == one:
        bad.add("zero != one")
    for a in E:
        if add[zero][a] != a or add[a][zero] != a:
            bad.add("add-identity")
        if mul[one][a] != a or mul[a][one] != a:
            bad.add("mul-identity")
        if mul[zero][a] != zero or mul[a][zero] != zero:
            bad.add("zero-absorbs")
    for a, b in product(E, E):
        if add[a][b] != add[b][a]:
            bad.add("add-commutative")
        if mul[a][b] != mul[b][a]:
            bad.add("mul-commutative")
    for a, b, c in product(E, E, E):
        if add[add[a][b]][c] != add[a][add[b][c]]:
            bad.add("add-associative")
        if mul[mul[a][b]][c] != mul[a][mul[b][c]]:
            bad.add("mul-associative")
        if mul[a][add[b][c]] != add[mul[a][b]][mul[a][c]]:
            bad.add("distributive")
    return bad


def module_violations(R, size, zero, add, act):
    radd, rmul = R.add.tolist(), R.mul.tolist()
    bad = set()
    E, K = range(size), range(R.size)
    for x in E:
        if add[zero][x] != x or add[x][zero] != x:
            bad.add("add-identity")
        if act[R.one][x] != x:
            bad.add("1m=m")
        if act[R.zero][x] != zero:
            bad.add("0m=0")
    for r in K:
        if act[r][zero] != zero:
            bad.add("r0=0")
    for x, y in product(E, E):
        if add[x][y] != add[y][x]:
            bad.add("add-commutative")
    for x, y, z in product(E, E, E):
        if add[add[x][y]][z] != add[x][add[y][z]]:
            bad.add("add-associative")
    for r, s, x in product(K, K, E):
        if act[rmul[r][s]][x] != act[r][act[s][x]]:
            bad.add("(rs)m=r(sm)")
        if act[radd[r][s]][x] != add[act[r][x]][act[s][x]]:
            bad.add("(r+s)m=rm+sm")
    for r, x, y in product(K, E, E):
        if act[r][add[x][y]] != add[act[r][x]][act[r][y]]:
            bad.add("r(m+n)=rm+rn")
    return bad


def is_closed(S, zero, add, act):
    if zero not in S:
        return False
    if any(add[x][y] not in S for x in S for y in S):
        return False
    return all(row[x] in S for row in act for x in S)


def closed_subsets(n, zero, add, act):
    out = []
    for k in range(1, n + 1):
        for combo in combinations(range(n), k):
            S = frozenset(combo)
            if is_closed(S, zero, add, act):
                out.append(S)
    return sorted(out, key=lambda S: sum(1 << x for x in S))


def ideals(R):
    return closed_subsets(R.size, R.zero, R.add.tolist(), R.mul.tolist())


def subs(M):
    return closed_subsets(M.size, M.zero, M.add.tolist(), M.act.tolist())


def is_prime(R, I):
    mul = R.mul.tolist()
    if len(I) == R.size:
        return False
    return all(a in I or b in I for a in range(R.size) for b in range(R.size) if mul[a][b] in I)


def image(act_row, S):
    return frozenset(act_row[x] for x in S)


def is_second(M, S):
    act = M.act.tolist()
    if S == {M.zero}:
        return False
    return all(image(row, S) in (frozenset(S), frozenset({M.zero})) for row in act)


def ann(M, S):
    act = M.act.tolist()
    return frozenset(r for r in range(M.base.size) if all(act[r][x] == M.zero for x in S))


def mask(S):
    return sum(1 << x for x in S)
