"""Finite posets: linear extensions, descents, order polynomials, ideal chains.

Elements are labeled 1..d.  Internally each element keeps bitmasks of the
elements strictly above and strictly below it (bit e-1 stands for element e),
which makes extension enumeration and ideal-lattice walks cheap at the
corpus sizes this library targets.
"""

from __future__ import annotations

from itertools import product
from typing import Iterable, Iterator

from .budget import charge
from .errors import InvalidInput
from .polynomial import IntPolynomial, RatPolynomial, interpolate


class Poset:
    """Strict partial order on elements 1..d.

    Construction accepts any relation list (not necessarily covers),
    takes the transitive closure, and rejects cyclic input with a
    diagnostic naming one cycle.
    """

    __slots__ = ("d", "_above", "_below", "_ideals")

    def __init__(self, d: int, relations: Iterable[tuple[int, int]] = ()) -> None:
        if d < 0:
            raise InvalidInput("poset size must be nonnegative")
        self.d = d
        direct: list[int] = [0] * d
        pairs = []
        for i, j in relations:
            if not (1 <= i <= d and 1 <= j <= d):
                raise InvalidInput(f"relation ({i}, {j}) out of range 1..{d}")
            if i == j:
                raise InvalidInput(f"reflexive relation ({i}, {i}) forms the cycle {i} < {i}")
            direct[i - 1] |= 1 << (j - 1)
            pairs.append((i - 1, j - 1))
        above = list(direct)
        changed = True
        while changed:
            changed = False
            for i in range(d):
                acc = above[i]
                m = above[i]
                while m:
                    j = (m & -m).bit_length() - 1
                    m &= m - 1
                    acc |= above[j]
                if acc != above[i]:
                    above[i] = acc
                    changed = True
        for i in range(d):
            if (above[i] >> i) & 1:
                raise InvalidInput(
                    "relations contain the cycle " + self._find_cycle(d, pairs, i)
                )
        below = [0] * d
        for i in range(d):
            m = above[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                below[j] |= 1 << i
        self._above = tuple(above)
        self._below = tuple(below)
        self._ideals: tuple[int, ...] | None = None

    @staticmethod
    def _find_cycle(d: int, pairs: list[tuple[int, int]], start: int) -> str:
        succ: dict[int, list[int]] = {}
        for a, b in pairs:
            succ.setdefault(a, []).append(b)
        path = [start]
        seen = {start}
        while True:
            for nxt in succ.get(path[-1], []):
                if nxt == start:
                    return " < ".join(str(v + 1) for v in path + [start])
                if nxt not in seen:
                    seen.add(nxt)
                    path.append(nxt)
                    break
            else:
                path.pop()  # dead end; backtrack (cycle exists, so never empties)

    # -- relation queries ---------------------------------------------------

    def less(self, i: int, j: int) -> bool:
        """Strict comparison of elements by 1-based label."""
        return bool((self._above[i - 1] >> (j - 1)) & 1)

    @property
    def relations(self) -> frozenset[tuple[int, int]]:
        """All strict pairs (i, j) with i < j in the closure."""
        out = []
        for i in range(self.d):
            m = self._above[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                out.append((i + 1, j + 1))
        return frozenset(out)

    @property
    def cover_relations(self) -> tuple[tuple[int, int], ...]:
        """Covers (i, j): i < j with nothing strictly between, sorted."""
        covers = []
        for i in range(self.d):
            m = self._above[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                if not (self._above[i] & self._below[j]):
                    covers.append((i + 1, j + 1))
        return tuple(sorted(covers))

    def longest_chain_length(self) -> int:
        """Number of elements in a longest chain (0 for the empty poset)."""
        depth = [0] * self.d
        for i in sorted(range(self.d), key=lambda v: bin(self._below[v]).count("1")):
            best = 0
            m = self._below[i]
            while m:
                j = (m & -m).bit_length() - 1
                m &= m - 1
                best = max(best, depth[j])
            depth[i] = best + 1
        return max(depth, default=0)

    def __eq__(self, other) -> bool:
        if not isinstance(other, Poset):
            return NotImplemented
        return self.d == other.d and self._above == other._above

    def __hash__(self) -> int:
        return hash((self.d, self._above))

    def __repr__(self) -> str:
        return f"Poset(d={self.d}, covers={list(self.cover_relations)})"

    # -- text format --------------------------------------------------------

    @classmethod
    def from_text(cls, text: str) -> "Poset":
        """Parse the shared poset format: `p <d> <k>` then k lines `r i j`."""
        lines = [ln.strip() for ln in text.splitlines()]
        lines = [ln for ln in lines if ln and not ln.startswith("c")]
        if not lines or not lines[0].startswith("p "):
            raise InvalidInput("poset file must start with a 'p <d> <k>' header")
        head = lines[0].split()
        if len(head) != 3:
            raise InvalidInput(f"malformed poset header {lines[0]!r}")
        try:
            d, k = int(head[1]), int(head[2])
        except ValueError as exc:
            raise InvalidInput(f"malformed poset header {lines[0]!r}") from exc
        body = lines[1:]
        if len(body) != k:
            raise InvalidInput(f"expected {k} relation lines, found {len(body)}")
        relations = []
        for ln in body:
            parts = ln.split()
            if len(parts) != 3 or parts[0] != "r":
                raise InvalidInput(f"malformed relation line {ln!r}")
            relations.append((int(parts[1]), int(parts[2])))
        return cls(d, relations)

    def to_text(self) -> str:
        covers = self.cover_relations
        out = [f"p {self.d} {len(covers)}"]
        out.extend(f"r {i} {j}" for i, j in covers)
        return "\n".join(out) + "\n"

    # -- order-ideal lattice ------------------------------------------------

    def order_ideals(self, budget: int | None = None) -> tuple[int, ...]:
        """All order ideals (down-sets) as bitmasks, sorted by size then value.

        Cached on the poset; refuses when the lattice exceeds the budget.
        """
        if self._ideals is not None:
            return self._ideals
        full = (1 << self.d) - 1
        below = self._below
        seen = {0}
        frontier = [0]
        count = 1
        while frontier:
            nxt = []
            for ideal in frontier:
                free = full & ~ideal
                m = free
                while m:
                    e = (m & -m).bit_length() - 1
                    m &= m - 1
                    if below[e] & ~ideal:
                        continue  # e has an uncovered lower bound
                    grown = ideal | (1 << e)
                    if grown not in seen:
                        seen.add(grown)
                        nxt.append(grown)
                        count += 1
                        charge(count, budget, "order-ideal lattice")
            frontier = nxt
        self._ideals = tuple(sorted(seen, key=lambda s: (bin(s).count("1"), s)))
        return self._ideals


# ---------------------------------------------------------------------------
# linear extensions and descents


def linear_extensions(poset: Poset) -> Iterator[tuple[int, ...]]:
    """Yield every linear extension as a tuple of element labels.

    Backtracks over currently-minimal elements in increasing label order,
    so the output order is lexicographic and deterministic.
    """
    d = poset.d
    below = poset._below
    out: list[int] = []

    def extend(chosen: int) -> Iterator[tuple[int, ...]]:
        if len(out) == d:
            yield tuple(out)
            return
        for e in range(d):
            bit = 1 << e
            if chosen & bit or below[e] & ~chosen:
                continue
            out.append(e + 1)
            yield from extend(chosen | bit)
            out.pop()

    return extend(0)


def natural_labeling(poset: Poset) -> dict[int, int]:
    """Map each element to its rank in the canonical linear extension.

    The canonical extension greedily takes the smallest available label,
    i.e. the lexicographically first extension.  Any natural labeling gives
    the same descent polynomial; this one is fixed for determinism.
    """
    d = poset.d
    below = poset._below
    chosen = 0
    rank: dict[int, int] = {}
    for pos in range(d):
        for e in range(d):
            bit = 1 << e
            if not (chosen & bit) and not (below[e] & ~chosen):
                rank[e + 1] = pos
                chosen |= bit
                break
    return rank


def descent_h_star(poset: Poset) -> IntPolynomial:
    """h*-polynomial of the order polytope via the descent statistic.

    Sum of z^{des(w)} over linear extensions w, descents taken against the
    natural labeling.  Agrees with the lattice-point and ideal-chain routes
    (the three-way test in the suite certifies this).
    """
    rank = natural_labeling(poset)
    counts = [0] * max(poset.d, 1)
    for w in linear_extensions(poset):
        des = sum(1 for a, b in zip(w, w[1:]) if rank[a] > rank[b])
        counts[des] += 1
    return IntPolynomial(counts)


# ---------------------------------------------------------------------------
# order-preserving map counts


def count_order_maps(
    poset: Poset, n: int, strict: bool = False, *, budget: int | None = None
) -> int:
    """Brute-force count of (weak or strict) order-preserving maps into {1..n}.

    This is the independent oracle: it enumerates all n^d candidate maps and
    filters by the cover relations.  Refuses above the work budget.
    """
    if n < 0:
        raise InvalidInput("n must be nonnegative")
    d = poset.d
    if d == 0:
        return 1
    if n == 0:
        return 0
    charge(n**d, budget, f"enumeration of {n}^{d} maps")
    covers = [(i - 1, j - 1) for i, j in poset.cover_relations]
    total = 0
    if strict:
        for phi in product(range(1, n + 1), repeat=d):
            if all(phi[i] < phi[j] for i, j in covers):
                total += 1
    else:
        for phi in product(range(1, n + 1), repeat=d):
            if all(phi[i] <= phi[j] for i, j in covers):
                total += 1
    return total


def order_map_counts(
    poset: Poset, n_max: int, strict: bool = False, *, budget: int | None = None
) -> list[int]:
    """Exact map counts for n = 0..n_max via the order-ideal lattice.

    A weak map into {1..n} is a multichain of ideals empty = I_0 <= ... <= I_n
    = full (I_i collects the elements mapped to at most i); strict maps are
    the multichains whose steps add antichains.  Dynamic programming over
    the ideal lattice gives the same numbers as :func:`count_order_maps`
    exponentially faster; the suite cross-checks the two.
    """
    ideals = poset.order_ideals(budget)
    index = {ideal: k for k, ideal in enumerate(ideals)}
    above = poset._above
    preds: list[list[int]] = []
    for ideal in ideals:
        row = []
        for sub in ideals:
            if sub & ~ideal:
                continue
            if strict:
                diff = ideal & ~sub
                m = diff
                ok = True
                while m:
                    e = (m & -m).bit_length() - 1
                    m &= m - 1
                    if above[e] & diff:
                        ok = False
                        break
                if not ok:
                    continue
            row.append(index[sub])
        preds.append(row)
    full_idx = index[(1 << poset.d) - 1]
    vec = [0] * len(ideals)
    vec[index[0]] = 1
    counts = [vec[full_idx]]
    for _ in range(n_max):
        vec = [sum(vec[j] for j in row) for row in preds]
        counts.append(vec[full_idx])
    return counts


def order_polynomial(
    poset: Poset, strict: bool = False, *, budget: int | None = None
) -> RatPolynomial:
    """The (weak or strict) order polynomial, exact.

    Interpolates the map counts at n = 0..d to the unique polynomial of
    degree d.  Counts come from the ideal-lattice walk, which matches the
    brute-force oracle everywhere it can run.
    """
    counts = order_map_counts(poset, poset.d, strict, budget=budget)
    return interpolate(list(enumerate(counts)))


# ---------------------------------------------------------------------------
# ideal-chain face counts


def ideal_chain_f_vector(poset: Poset, *, budget: int | None = None) -> IntPolynomial:
    """Face-count polynomial of the canonical triangulation of the order polytope.

    Coefficient of z^i is the number of i-element chains in the lattice of
    order ideals (empty and full ideal included as chain members; the
    constant term 1 stands for the empty chain).  Feeding the result to
    :func:`~hstarlib.polynomial.f_to_h` with ambient dimension d reproduces
    the h*-polynomial.
    """
    ideals = poset.order_ideals(budget)
    k = len(ideals)
    # strict-subset predecessor lists; ideals are sorted by popcount so
    # predecessors always precede their supersets
    preds = [
        [a for a in range(k) if ideals[a] != ideals[b] and not (ideals[a] & ~ideals[b])]
        for b in range(k)
    ]
    f = [1]  # empty chain
    layer = [1] * k  # 1-element chains ending at each ideal
    while any(layer):
        f.append(sum(layer))
        layer = [sum(layer[a] for a in preds[b]) for b in range(k)]
    return IntPolynomial(f)
