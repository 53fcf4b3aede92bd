"""Lattice-point counting and h*-extraction for the supported polytope classes.

Three kinds of polytope are supported: order polytopes of posets (counted
combinatorially through order-preserving maps, never through geometry),
lattice simplices (exact barycentric membership), and bounded
H-representation polytopes (bounding-box enumeration).  Everything is
integer or rational arithmetic.
"""

from __future__ import annotations

from fractions import Fraction
from math import ceil, comb, floor
from pathlib import Path
from typing import Sequence

from .budget import charge
from .errors import InternalConsistencyError, InvalidInput
from .polynomial import IntPolynomial, RatPolynomial, interpolate, reverse
from .poset import Poset, order_map_counts


def _invert(matrix: list[list[Fraction]]) -> tuple[Fraction, list[list[Fraction]]]:
    """Exact (det, inverse) of a square rational matrix by Gauss-Jordan."""
    n = len(matrix)
    a = [row[:] + [Fraction(int(i == j)) for j in range(n)] for i, row in enumerate(matrix)]
    det = Fraction(1)
    for col in range(n):
        pivot = next((r for r in range(col, n) if a[r][col] != 0), None)
        if pivot is None:
            return Fraction(0), []
        if pivot != col:
            a[col], a[pivot] = a[pivot], a[col]
            det = -det
        det *= a[col][col]
        inv_p = Fraction(1) / a[col][col]
        a[col] = [x * inv_p for x in a[col]]
        for r in range(n):
            if r != col and a[r][col] != 0:
                factor = a[r][col]
                a[r] = [x - factor * y for x, y in zip(a[r], a[col])]
    return det, [row[n:] for row in a]


class OrderPolytope:
    """The order polytope of a poset: 0 <= x_i <= 1, x_i <= x_j for p_i < p_j.

    Counting never enumerates boxes: closed dilate counts are weak
    order-preserving maps into {0..n}, interior counts are strict maps into
    {1..n-1}, both read off the order-ideal lattice.
    """

    __slots__ = ("poset",)

    def __init__(self, poset: Poset) -> None:
        self.poset = poset

    @property
    def dim(self) -> int:
        return self.poset.d

    def count_series(
        self, n_max: int, interior: bool = False, *, budget: int | None = None
    ) -> list[int]:
        if interior:
            # count at n is Omega°(n-1); the n = 0 entry is 0 by the
            # open-series convention
            strict = order_map_counts(self.poset, max(n_max - 1, 0), True, budget=budget)
            return [0] + strict[: n_max]
        weak = order_map_counts(self.poset, n_max + 1, False, budget=budget)
        return weak[1:]

    def count_points(self, n: int, interior: bool = False, *, budget: int | None = None) -> int:
        return self.count_series(n, interior, budget=budget)[n]

    def __repr__(self) -> str:
        return f"OrderPolytope({self.poset!r})"


class Simplex:
    """Lattice simplex given by d+1 affinely independent vertices in Z^d.

    Membership of a point in the n-th dilate is decided by exact barycentric
    coordinates: with A the (vertex | 1) matrix, x lies in n*P iff
    adj(A) @ (x, n) is coordinatewise >= 0 (> 0 for the interior).
    """

    __slots__ = ("vertices", "_adj", "_det")

    def __init__(self, vertices: Sequence[Sequence[int]]) -> None:
        verts = tuple(tuple(int(c) for c in v) for v in vertices)
        if not verts:
            raise InvalidInput("simplex needs vertices")
        d = len(verts[0])
        if any(len(v) != d for v in verts):
            raise InvalidInput("vertices of mixed dimension")
        if len(verts) != d + 1:
            raise InvalidInput(f"a {d}-simplex needs exactly {d + 1} vertices")
        self.vertices = verts
        a = [[Fraction(verts[k][i]) for k in range(d + 1)] for i in range(d)]
        a.append([Fraction(1)] * (d + 1))
        det, inv = _invert(a)
        if det == 0:
            raise InvalidInput("vertices are affinely dependent")
        # scale the inverse by |det| so that membership reduces to integer
        # sign tests: mu * |det| = adj @ (x, n) and mu >= 0 iff adj @ (x, n) >= 0
        det = abs(det)
        adj = [[x * det for x in row] for row in inv]
        if any(x.denominator != 1 for row in adj for x in row):
            raise InternalConsistencyError("adjugate of an integer matrix must be integral")
        self._adj = [[x.numerator for x in row] for row in adj]
        self._det = det.numerator

    @property
    def dim(self) -> int:
        return len(self.vertices[0])

    def count_points(self, n: int, interior: bool = False, *, budget: int | None = None) -> int:
        if n < 0:
            raise InvalidInput("n must be nonnegative")
        d = self.dim
        lo = [n * min(v[i] for v in self.vertices) for i in range(d)]
        hi = [n * max(v[i] for v in self.vertices) for i in range(d)]
        volume = 1
        for a, b in zip(lo, hi):
            volume *= b - a + 1
        charge(volume, budget, "bounding-box enumeration")
        adj = self._adj
        total = 0
        point = lo[:]
        while True:
            ok = True
            for row in adj:
                bary = sum(c * x for c, x in zip(row, point)) + row[d] * n
                if bary < 0 or (interior and bary == 0):
                    ok = False
                    break
            if ok:
                total += 1
            # odometer over the box
            i = 0
            while i < d and point[i] == hi[i]:
                point[i] = lo[i]
                i += 1
            if i == d:
                break
            point[i] += 1
        return total

    def to_text(self) -> str:
        lines = [f"simplex {self.dim}"]
        lines.extend(" ".join(str(c) for c in v) for v in self.vertices)
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"Simplex({list(self.vertices)!r})"


class HRepPolytope:
    """Bounded polytope {x : a.x <= b for all rows}, declared dimension d.

    A lattice bounding box is derived by interval propagation from the
    inequalities; input whose box cannot be derived (and that carries no
    user-supplied box) is rejected as potentially unbounded.  The declared
    dimension is trusted but sanity-checked downstream: a full-dimensional
    polytope must produce an Ehrhart polynomial of degree exactly d.
    """

    __slots__ = ("inequalities", "d", "box", "user_box")

    def __init__(
        self,
        inequalities: Sequence[tuple[Sequence[int], int]],
        d: int,
        box: tuple[Sequence[int], Sequence[int]] | None = None,
    ) -> None:
        if d < 1:
            raise InvalidInput("HRep dimension must be at least 1")
        self.d = d
        rows = []
        for normal, bound in inequalities:
            normal = tuple(int(c) for c in normal)
            if len(normal) != d:
                raise InvalidInput("normal vector of wrong dimension")
            rows.append((normal, int(bound)))
        self.inequalities: tuple[tuple[tuple[int, ...], int], ...] = tuple(rows)
        if box is not None:
            lo, hi = box
            if len(lo) != d or len(hi) != d:
                raise InvalidInput("box must give d lower and d upper bounds")
            self.user_box = (tuple(int(x) for x in lo), tuple(int(x) for x in hi))
            self.box = (
                tuple(Fraction(x) for x in self.user_box[0]),
                tuple(Fraction(x) for x in self.user_box[1]),
            )
        else:
            self.user_box = None
            self.box = self._derive_box()
        if any(l > h for l, h in zip(*self.box)):
            raise InvalidInput("empty bounding box; polytope has no points")

    def _derive_box(self) -> tuple[tuple[Fraction, ...], tuple[Fraction, ...]]:
        d = self.d
        lo: list[Fraction | None] = [None] * d
        hi: list[Fraction | None] = [None] * d
        for _ in range(d * max(len(self.inequalities), 1)):
            improved = False
            for normal, bound in self.inequalities:
                for i in range(d):
                    if normal[i] == 0:
                        continue
                    rest = Fraction(0)
                    feasible = True
                    for j in range(d):
                        if j == i or normal[j] == 0:
                            continue
                        # smallest possible contribution of term j
                        side = lo[j] if normal[j] > 0 else hi[j]
                        if side is None:
                            feasible = False
                            break
                        rest += normal[j] * side
                    if not feasible:
                        continue
                    value = Fraction(bound - rest, normal[i])
                    if normal[i] > 0:
                        if hi[i] is None or value < hi[i]:
                            hi[i] = value
                            improved = True
                    else:
                        if lo[i] is None or value > lo[i]:
                            lo[i] = value
                            improved = True
            if not improved:
                break
        if any(b is None for b in lo) or any(b is None for b in hi):
            raise InvalidInput(
                "cannot derive a bounding box from the inequalities; "
                "supply an explicit box or check that the polytope is bounded"
            )
        return tuple(lo), tuple(hi)  # type: ignore[arg-type]

    @property
    def dim(self) -> int:
        return self.d

    def count_points(self, n: int, interior: bool = False, *, budget: int | None = None) -> int:
        if n < 0:
            raise InvalidInput("n must be nonnegative")
        d = self.d
        lo_q, hi_q = self.box
        lo = [ceil(n * q) for q in lo_q]
        hi = [floor(n * q) for q in hi_q]
        if any(a > b for a, b in zip(lo, hi)):
            return 0
        volume = 1
        for a, b in zip(lo, hi):
            volume *= b - a + 1
        charge(volume, budget, "bounding-box enumeration")
        rows = self.inequalities
        total = 0
        point = lo[:]
        while True:
            ok = True
            for normal, bound in rows:
                value = sum(c * x for c, x in zip(normal, point))
                limit = n * bound
                if value > limit or (interior and value == limit):
                    ok = False
                    break
            if ok:
                total += 1
            i = 0
            while i < d and point[i] == hi[i]:
                point[i] = lo[i]
                i += 1
            if i == d:
                break
            point[i] += 1
        return total

    def to_text(self) -> str:
        lines = [f"hrep {self.d} {len(self.inequalities)}"]
        lines.extend(
            " ".join(str(c) for c in normal) + f" {bound}"
            for normal, bound in self.inequalities
        )
        if self.user_box is not None:
            lo, hi = self.user_box
            lines.append("box " + " ".join(str(x) for x in (*lo, *hi)))
        return "\n".join(lines) + "\n"

    def __repr__(self) -> str:
        return f"HRepPolytope(d={self.d}, rows={len(self.inequalities)})"


LatticePolytope = OrderPolytope | Simplex | HRepPolytope


# ---------------------------------------------------------------------------
# counting operations


def count_points(
    polytope: LatticePolytope, n: int, interior: bool = False, *, budget: int | None = None
) -> int:
    """Exact number of lattice points in the n-th dilate (or its interior).

    count_points(P, 0) = 1 and count_points(P, 0, interior) = 0 for every
    supported polytope of dimension >= 1.
    """
    return polytope.count_points(n, interior, budget=budget)


def _closed_counts(polytope: LatticePolytope, budget: int | None) -> list[int]:
    d = polytope.dim
    if isinstance(polytope, OrderPolytope):
        return polytope.count_series(d, budget=budget)
    return [polytope.count_points(n, budget=budget) for n in range(d + 1)]


def ehrhart_polynomial(polytope: LatticePolytope, *, budget: int | None = None) -> RatPolynomial:
    """Interpolate closed dilate counts at n = 0..d; degree is exactly d."""
    d = polytope.dim
    ehr = interpolate(list(enumerate(_closed_counts(polytope, budget))))
    if d > 0 and (ehr.degree != d or ehr.leading_coefficient() <= 0):
        raise InternalConsistencyError(
            f"Ehrhart polynomial {ehr!r} lacks degree {d} with positive leading "
            "coefficient; declared dimension is wrong or the polytope is degenerate"
        )
    return ehr


def h_star(polytope: LatticePolytope, *, budget: int | None = None) -> IntPolynomial:
    """h*-polynomial: series numerator of the Ehrhart polynomial.

    Equals series_numerator(ehrhart_polynomial(P), d) but works on the raw
    integer counts (the numerator formula only reads the values at n = 0..d),
    which keeps corpus sweeps out of rational arithmetic.  Validates
    h*_0 = 1 and nonnegativity, which hold for every lattice polytope; a
    violation means the input was not what it claimed to be.
    """
    d = polytope.dim
    counts = _closed_counts(polytope, budget)
    if d > 0:
        # d-th finite difference = d! * leading Ehrhart coefficient
        volume = sum((-1) ** (d - k) * comb(d, k) * counts[k] for k in range(d + 1))
        if volume <= 0:
            raise InternalConsistencyError(
                f"normalized volume {volume} is not positive; "
                "declared dimension is wrong or the polytope is degenerate"
            )
    h = IntPolynomial(
        [
            sum((-1) ** i * comb(d + 1, i) * counts[j - i] for i in range(j + 1))
            for j in range(d + 1)
        ]
    )
    if h[0] != 1:
        raise InternalConsistencyError(f"h*_0 = {h[0]}, expected 1")
    if not h.is_nonnegative():
        raise InternalConsistencyError(f"negative h* coefficient in {h.coeffs}")
    return h


def open_numerator(hstar: IntPolynomial, d: int) -> IntPolynomial:
    """Numerator of the interior-point series, by Ehrhart-Macdonald reciprocity.

    The reversal z^{d+1} h*(1/z); monic of degree d+1 since h*_0 = 1.
    """
    if hstar[0] != 1:
        raise InvalidInput("h* must have constant term 1")
    if hstar.degree > d:
        raise InvalidInput(f"degree {hstar.degree} exceeds ambient d = {d}")
    return reverse(hstar, d + 1)


# ---------------------------------------------------------------------------
# polytope file format


def parse_polytope(text: str, base_dir: str | Path | None = None) -> LatticePolytope:
    """Parse the polytope file format.

    Either ``simplex <d>`` followed by d+1 vertex lines of d integers, or
    ``hrep <d> <k>`` followed by k inequality lines of d+1 integers (normal
    then bound) and an optional ``box`` line of 2d integers (d lows then d
    highs), or ``order <poset-file>`` referencing a poset file relative to
    ``base_dir``.
    """
    lines = [ln.strip() for ln in text.splitlines()]
    lines = [ln for ln in lines if ln and not ln.startswith("c")]
    if not lines:
        raise InvalidInput("empty polytope file")
    head = lines[0].split()
    kind = head[0]
    if kind == "simplex":
        if len(head) != 2:
            raise InvalidInput("simplex header must be 'simplex <d>'")
        d = int(head[1])
        if len(lines) != d + 2:
            raise InvalidInput(f"simplex in dimension {d} needs {d + 1} vertex lines")
        vertices = []
        for ln in lines[1:]:
            coords = [int(tok) for tok in ln.split()]
            if len(coords) != d:
                raise InvalidInput(f"vertex line {ln!r} must have {d} integers")
            vertices.append(coords)
        return Simplex(vertices)
    if kind == "hrep":
        if len(head) != 3:
            raise InvalidInput("hrep header must be 'hrep <d> <k>'")
        d, k = int(head[1]), int(head[2])
        body = lines[1:]
        box = None
        if body and body[-1].startswith("box"):
            parts = [int(tok) for tok in body[-1].split()[1:]]
            if len(parts) != 2 * d:
                raise InvalidInput("box line must have 2d integers")
            box = (parts[:d], parts[d:])
            body = body[:-1]
        if len(body) != k:
            raise InvalidInput(f"expected {k} inequality lines, found {len(body)}")
        rows = []
        for ln in body:
            nums = [int(tok) for tok in ln.split()]
            if len(nums) != d + 1:
                raise InvalidInput(f"inequality line {ln!r} must have {d + 1} integers")
            rows.append((nums[:d], nums[d]))
        return HRepPolytope(rows, d, box)
    if kind == "order":
        if len(head) != 2:
            raise InvalidInput("order header must be 'order <poset-file>'")
        path = Path(head[1])
        if base_dir is not None and not path.is_absolute():
            path = Path(base_dir) / path
        try:
            poset_text = path.read_text()
        except OSError as exc:
            raise InvalidInput(f"cannot read poset file {path}: {exc}") from exc
        return OrderPolytope(Poset.from_text(poset_text))
    raise InvalidInput(f"unknown polytope kind {kind!r}")


def load_polytope(path: str | Path) -> LatticePolytope:
    path = Path(path)
    return parse_polytope(path.read_text(), base_dir=path.parent)
