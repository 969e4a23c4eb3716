"""Brute-force cross-checks for the closed-form invariants.

``todd_coxeter`` enumerates cosets of the trivial subgroup (HLT strategy,
coincidences resolved immediately) to get |W| of a finite Coxeter group.
``snf_abelianization`` reduces the abelianized relation matrix to Smith
normal form over the integers.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import CosetLimitExceeded
from .graph import INF, CoxeterGraph

DEFAULT_MAX_COSETS = 10**6


def coxeter_relators(g: CoxeterGraph) -> list[list[int]]:
    """Relators ``(uv)^m`` as generator-index words; ``u^2`` is implicit
    because every column of the table is kept involutive."""
    rels = []
    for u, v, m in g.pairs():
        if m == INF:
            continue
        i, j = g.position(u), g.position(v)
        rels.append([i, j] * m)
    return rels


class CosetTable:
    """Coset table for a Coxeter presentation over the trivial subgroup.

    Coset 0 is the subgroup itself. ``parent`` is the union-find forest of
    coincidences; a coset is live iff it is its own parent.
    """

    def __init__(self, g: CoxeterGraph, max_cosets: int = DEFAULT_MAX_COSETS):
        self.graph = g
        self.ngens = len(g)
        self.relators = coxeter_relators(g)
        self.max_cosets = max_cosets
        self.table: list[list[int | None]] = [[None] * self.ngens]
        self.parent = [0]
        self.defined = 1

    # -- union-find

    def find(self, c: int) -> int:
        parent = self.parent
        root = c
        while parent[root] != root:
            root = parent[root]
        while parent[c] != root:
            parent[c], c = root, parent[c]
        return root

    def is_live(self, c: int) -> bool:
        return self.parent[c] == c

    # -- primitive steps

    def _define(self, c: int, x: int) -> int:
        if self.defined >= self.max_cosets:
            raise CosetLimitExceeded(self.max_cosets)
        d = self.defined
        self.defined += 1
        self.table.append([None] * self.ngens)
        self.parent.append(d)
        self.table[c][x] = d
        self.table[d][x] = c
        return d

    def _merge(self, a: int, b: int, queue: list[int]) -> None:
        a, b = self.find(a), self.find(b)
        if a == b:
            return
        if a > b:
            a, b = b, a
        self.parent[b] = a
        queue.append(b)

    def _coincidence(self, a: int, b: int) -> None:
        table = self.table
        queue: list[int] = []
        self._merge(a, b, queue)
        i = 0
        while i < len(queue):
            e = queue[i]
            i += 1
            row = table[e]
            for x in range(self.ngens):
                f = row[x]
                if f is None:
                    continue
                # generators are involutions: f.x == e, drop that back-pointer
                table[f][x] = None
                row[x] = None
                e1, f1 = self.find(e), self.find(f)
                if table[e1][x] is not None:
                    self._merge(f1, table[e1][x], queue)
                elif table[f1][x] is not None:
                    self._merge(e1, table[f1][x], queue)
                else:
                    table[e1][x] = f1
                    table[f1][x] = e1

    def _scan_and_fill(self, c: int, word: list[int]) -> None:
        table = self.table
        f, b = c, c
        i, j = 0, len(word) - 1
        while True:
            while i <= j and table[f][word[i]] is not None:
                f = table[f][word[i]]
                i += 1
            if i > j:
                if f != c:
                    self._coincidence(f, c)
                return
            while j >= i and table[b][word[j]] is not None:
                b = table[b][word[j]]
                j -= 1
            if j < i:
                self._coincidence(f, b)
                return
            if i == j:
                table[f][word[i]] = b
                table[b][word[i]] = f
                return
            self._define(f, word[i])

    # -- driver

    def run(self) -> "CosetTable":
        c = 0
        while c < self.defined:
            if self.is_live(c):
                for rel in self.relators:
                    self._scan_and_fill(c, rel)
                    if not self.is_live(c):
                        break
                else:
                    for x in range(self.ngens):
                        if self.table[c][x] is None:
                            self._define(c, x)
            c += 1
        return self

    @property
    def live_cosets(self) -> list[int]:
        return [c for c in range(self.defined) if self.is_live(c)]

    @property
    def order(self) -> int:
        return len(self.live_cosets)

    def is_closed(self) -> bool:
        """Every relator traced from every live coset returns to it, every
        entry is defined, live and involutive."""
        table = self.table
        for c in self.live_cosets:
            row = table[c]
            for x in range(self.ngens):
                d = row[x]
                if d is None or not self.is_live(d) or table[d][x] != c:
                    return False
            for rel in self.relators:
                d = c
                for x in rel:
                    d = table[d][x]
                if d != c:
                    return False
        return True


def enumerate_cosets(g: CoxeterGraph, max_cosets: int = DEFAULT_MAX_COSETS) -> CosetTable:
    return CosetTable(g, max_cosets).run()


def todd_coxeter(g: CoxeterGraph, max_cosets: int = DEFAULT_MAX_COSETS) -> int:
    """|W_Gamma| by coset enumeration.

    Raises CosetLimitExceeded once more than ``max_cosets`` cosets have been
    defined. That says nothing about whether the group is infinite.
    """
    return enumerate_cosets(g, max_cosets).order


# ---------------------------------------------------------------------------
# Smith normal form


@dataclass(frozen=True)
class AbelianInvariants:
    """Z^free_rank x Z/d_1 x ... x Z/d_k with d_i > 1 and d_i | d_{i+1}."""

    torsion: tuple[int, ...]
    free_rank: int


def relation_matrix(g: CoxeterGraph) -> list[list[int]]:
    n = len(g)
    rows = []
    for v in g.vertices:
        row = [0] * n
        row[g.position(v)] = 2
        rows.append(row)
    for u, v, m in g.pairs():
        if m == INF:
            continue
        row = [0] * n
        row[g.position(u)] += m
        row[g.position(v)] += m
        rows.append(row)
    return rows


def smith_diagonal(matrix: list[list[int]]) -> list[int]:
    """Nonzero diagonal of the Smith normal form (each entry divides the next)."""
    a = [list(r) for r in matrix]
    nrows = len(a)
    ncols = len(a[0]) if a else 0
    diag = []
    t = 0
    while t < min(nrows, ncols):
        # pivot: smallest nonzero |entry| in the remaining block
        best = None
        for i in range(t, nrows):
            for j in range(t, ncols):
                if a[i][j] and (best is None or abs(a[i][j]) < abs(a[best[0]][best[1]])):
                    best = (i, j)
        if best is None:
            break
        i, j = best
        a[t], a[i] = a[i], a[t]
        for row in a:
            row[t], row[j] = row[j], row[t]
        while True:
            p = a[t][t]
            dirty = False
            for i in range(t + 1, nrows):
                q = a[i][t] // p
                if q:
                    a[i] = [x - q * y for x, y in zip(a[i], a[t])]
                if a[i][t]:
                    dirty = True
            for j in range(t + 1, ncols):
                q = a[t][j] // p
                if q:
                    for row in a:
                        row[j] -= q * row[t]
                if a[t][j]:
                    dirty = True
            if not dirty:
                # pivot must divide the rest of the block
                bad = next(((i, j) for i in range(t + 1, nrows) for j in range(t + 1, ncols)
                            if a[i][j] % p), None)
                if bad is None:
                    break
                a[t] = [x + y for x, y in zip(a[t], a[bad[0]])]
                continue
            # move the smallest remainder into the pivot slot and repeat
            best = None
            for i in range(t, nrows):
                if a[i][t] and (best is None or abs(a[i][t]) < abs(a[best][t])):
                    best = i
            a[t], a[best] = a[best], a[t]
            bestc = None
            for j in range(t, ncols):
                if a[t][j] and (bestc is None or abs(a[t][j]) < abs(a[t][bestc])):
                    bestc = j
            for row in a:
                row[t], row[bestc] = row[bestc], row[t]
        diag.append(abs(a[t][t]))
        t += 1
    return diag


def snf_abelianization(g: CoxeterGraph) -> AbelianInvariants:
    n = len(g)
    if n == 0:
        return AbelianInvariants((), 0)
    diag = smith_diagonal(relation_matrix(g))
    return AbelianInvariants(tuple(d for d in diag if d > 1), n - len(diag))
