"""Closure and enumeration of subsets closed under an addition table and a
scalar-action table.  Ideals of R are the closed subsets of R acting on
itself, so both lattices share this engine."""

from itertools import product

from . import bitset


class TableLattice:
    def __init__(self, n: int, zero: int, add: list[list[int]], act: list[list[int]]):
        self.n = n
        self.zero = zero
        self.add = add
        self.act = act
        self._cyclic: list[int] | None = None
        self._all: list[int] | None = None

    def orbit(self, x: int) -> int:
        mask = 0
        for row in self.act:
            mask |= 1 << row[x]
        return mask

    def additive_closure(self, mask: int) -> int:
        mask |= 1 << self.zero
        elems = bitset.to_list(mask)
        add = self.add
        i = 0
        while i < len(elems):
            row = add[elems[i]]
            for y in elems[: i + 1]:
                s = row[y]
                if not (mask >> s) & 1:
                    mask |= 1 << s
                    elems.append(s)
            i += 1
        return mask

    def closure(self, mask: int) -> int:
        gen = 1 << self.zero
        for x in bitset.members(mask):
            gen |= self.orbit(x)
        # an act-closed set stays act-closed under additive closure: r(a+b) = ra + rb
        return self.additive_closure(gen)

    def join(self, a: int, b: int) -> int:
        """Sum of two closed subsets; {s + t} is already closed."""
        add = self.add
        bs = bitset.to_list(b)
        out = 0
        for s in bitset.members(a):
            row = add[s]
            for t in bs:
                out |= 1 << row[t]
        return out

    def cyclic(self) -> list[int]:
        if self._cyclic is None:
            self._cyclic = [self.closure(1 << x) for x in range(self.n)]
        return self._cyclic

    def is_closed(self, mask: int) -> bool:
        if not (mask >> self.zero) & 1:
            return False
        elems = bitset.to_list(mask)
        for row in self.act:
            for x in elems:
                if not (mask >> row[x]) & 1:
                    return False
        for x, y in product(elems, repeat=2):
            if not (mask >> self.add[x][y]) & 1:
                return False
        return True

    def enumerate_by_closure(self) -> list[int]:
        if self._all is None:
            gens = sorted(set(self.cyclic()))
            bottom = 1 << self.zero
            seen = {bottom}
            frontier = [bottom]
            while frontier:
                nxt = []
                for s in frontier:
                    for c in gens:
                        if c & ~s:
                            t = self.join(s, c)
                            if t not in seen:
                                seen.add(t)
                                nxt.append(t)
                frontier = nxt
            self._all = sorted(seen)
        return list(self._all)

    def enumerate_by_filter(self) -> list[int]:
        return [m for m in range(1 << self.n) if self.is_closed(m)]
