"""Graded vector spaces, chain complexes and the operations on them.

This module is the homological middle layer: finitely supported graded
dimensions (`GradedVS`), degreewise linear maps (`GradedMap`), chain
complexes with checked square-zero differentials, homology with optional
representative cycles, mapping cones, tensor products with Koszul signs,
truncation / cotruncation of graded data and the long-exact-sequence
dimension count used by every Mayer-Vietoris assembly downstream.

Conventions.  Differentials lower degree: d_j : C_j -> C_{j-1}.  Tensor
bases in degree j are blocks ordered by ascending second-factor degree and
lexicographically (first-factor index, second-factor index) inside a block;
the stratified module's coordinate projections rely on exactly this order.
Degree -1 (and any other absent degree) reads as dimension 0.

All values are immutable after construction; operations are pure.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Mapping

from .qlinalg import (
    DimensionMismatch,
    IncrementalSpan,
    MatrixQ,
    hstack,
    image_basis,
    kernel_basis,
    rank,
    solve,
)


class GradedVS:
    """A finite-dimensional graded vector space recorded by its dimensions."""

    __slots__ = ("_dims",)

    def __init__(self, dims: Mapping[int, int] | Iterable[int] | None = None):
        d = {}
        if dims is None:
            pass
        elif isinstance(dims, Mapping):
            for j, n in dims.items():
                if n < 0:
                    raise ValueError(f"negative dimension {n} in degree {j}")
                if n:
                    d[int(j)] = int(n)
        else:
            for j, n in enumerate(dims):
                if n < 0:
                    raise ValueError(f"negative dimension {n} in degree {j}")
                if n:
                    d[j] = int(n)
        self._dims = d

    def __getitem__(self, j: int) -> int:
        return self._dims.get(j, 0)

    def degrees(self) -> list[int]:
        return sorted(self._dims)

    @property
    def top(self) -> int:
        return max(self._dims) if self._dims else -1

    @property
    def bottom(self) -> int:
        return min(self._dims) if self._dims else 0

    def total_dim(self) -> int:
        return sum(self._dims.values())

    def euler(self) -> int:
        return sum((-1) ** j * n for j, n in self._dims.items())

    def is_zero(self) -> bool:
        return not self._dims

    def as_tuple(self, lo: int = 0, hi: int | None = None) -> tuple[int, ...]:
        """Dimensions in degrees lo..hi inclusive (hi defaults to the top)."""
        if hi is None:
            hi = max(self.top, lo)
        return tuple(self[j] for j in range(lo, hi + 1))

    def convolve(self, other: "GradedVS") -> "GradedVS":
        out: dict[int, int] = {}
        for i, a in self._dims.items():
            for j, b in other._dims.items():
                out[i + j] = out.get(i + j, 0) + a * b
        return GradedVS(out)

    def truncate_le(self, cut: int) -> "GradedVS":
        """Keep degrees <= cut, zero elsewhere."""
        return GradedVS({j: n for j, n in self._dims.items() if j <= cut})

    def truncate_ge(self, cut: int) -> "GradedVS":
        """Keep degrees >= cut, zero elsewhere."""
        return GradedVS({j: n for j, n in self._dims.items() if j >= cut})

    def shifted(self, by: int) -> "GradedVS":
        return GradedVS({j + by: n for j, n in self._dims.items()})

    def __add__(self, other: "GradedVS") -> "GradedVS":
        out = dict(self._dims)
        for j, n in other._dims.items():
            out[j] = out.get(j, 0) + n
        return GradedVS(out)

    def __eq__(self, other) -> bool:
        return isinstance(other, GradedVS) and self._dims == other._dims

    def __hash__(self) -> int:
        return hash(tuple(sorted(self._dims.items())))

    def __repr__(self) -> str:
        if not self._dims:
            return "GradedVS(0)"
        lo = min(self._dims)
        if lo >= 0:
            return f"GradedVS{self.as_tuple(0)}"
        return f"GradedVS({dict(sorted(self._dims.items()))})"


def truncate_graded(v: GradedVS, mode: str, cut: int) -> GradedVS:
    """Truncation of graded dimensions: mode 'le' keeps degrees <= cut,
    mode 'ge' keeps degrees >= cut."""
    if mode == "le":
        return v.truncate_le(cut)
    if mode == "ge":
        return v.truncate_ge(cut)
    raise ValueError(f"unknown truncation mode {mode!r} (want 'le' or 'ge')")


class GradedMap:
    """A degreewise linear map between graded vector spaces.

    Blocks are stored only where nonzero; `block(j)` materializes the zero
    matrix of the right shape otherwise.
    """

    __slots__ = ("source", "target", "_blocks")

    def __init__(self, source: GradedVS, target: GradedVS,
                 blocks: Mapping[int, MatrixQ] | None = None):
        self.source = source
        self.target = target
        b = {}
        for j, m in (blocks or {}).items():
            if (m.rows, m.cols) != (target[j], source[j]):
                raise DimensionMismatch(
                    f"block in degree {j} is {m.rows}x{m.cols}, expected "
                    f"{target[j]}x{source[j]}")
            if not m.is_zero():
                b[int(j)] = m
        self._blocks = b

    def block(self, j: int) -> MatrixQ:
        return self._blocks.get(j, MatrixQ.zeros(self.target[j], self.source[j]))

    def stored_degrees(self) -> list[int]:
        return sorted(self._blocks)

    def rank(self, j: int) -> int:
        return rank(self.block(j))

    def kernel_dim(self, j: int) -> int:
        return self.source[j] - self.rank(j)

    def coker_dim(self, j: int) -> int:
        return self.target[j] - self.rank(j)

    def __eq__(self, other) -> bool:
        return (isinstance(other, GradedMap)
                and self.source == other.source
                and self.target == other.target
                and all(self.block(j) == other.block(j)
                        for j in set(self._blocks) | set(other._blocks)))

    __hash__ = None

    def __repr__(self) -> str:
        return f"GradedMap({self.source!r} -> {self.target!r})"


def les_third_dims(beta: GradedMap) -> GradedVS:
    """Dimension of the third term of the long exact sequence through beta.

    For ... -> B_j --beta--> C_j -> H_j -> B_{j-1} --beta--> C_{j-1} -> ...
    over a field, dim H_j = dim coker(beta_j) + dim ker(beta_{j-1}); degree
    -1 contributes nothing.
    """
    degs = set(beta.source.degrees()) | set(beta.target.degrees())
    if not degs:
        return GradedVS()
    out = {}
    for j in range(min(degs), max(degs) + 2):
        d = beta.coker_dim(j)
        if j - 1 >= min(degs):
            d += beta.kernel_dim(j - 1)
        if d:
            out[j] = d
    return GradedVS(out)


class ChainComplex:
    """A chain complex of finite-dimensional rational vector spaces.

    `differentials[j]` is the matrix of d_j : C_j -> C_{j-1}.  Construction
    checks shapes and d o d = 0; a violating complex cannot be built.
    """

    __slots__ = ("spaces", "differentials", "_homology_cache")

    def __init__(self, spaces: GradedVS,
                 differentials: Mapping[int, MatrixQ] | None = None):
        self.spaces = spaces
        diffs = {}
        for j, m in (differentials or {}).items():
            if (m.rows, m.cols) != (spaces[j - 1], spaces[j]):
                raise DimensionMismatch(
                    f"differential in degree {j} is {m.rows}x{m.cols}, "
                    f"expected {spaces[j - 1]}x{spaces[j]}")
            if not m.is_zero():
                diffs[int(j)] = m
        for j, m in diffs.items():
            prev = diffs.get(j - 1)
            if prev is not None and not (prev @ m).is_zero():
                raise ValueError(f"d_{j-1} o d_{j} != 0")
        self.differentials = diffs
        self._homology_cache = None

    def differential(self, j: int) -> MatrixQ:
        return self.differentials.get(
            j, MatrixQ.zeros(self.spaces[j - 1], self.spaces[j]))

    @property
    def top(self) -> int:
        return self.spaces.top

    def euler(self) -> int:
        return self.spaces.euler()

    def homology(self) -> GradedVS:
        """Betti numbers: dim ker d_j - dim im d_{j+1} in each degree."""
        return self.homology_data().betti

    def homology_data(self) -> "HomologyData":
        if self._homology_cache is None:
            self._homology_cache = _compute_homology(self)
        return self._homology_cache

    def __repr__(self) -> str:
        return f"ChainComplex({self.spaces!r})"


@dataclass(frozen=True)
class HomologyData:
    """Homology of a complex plus enough data to map into it.

    `representatives[j]` is a matrix whose columns are cycles whose classes
    form a basis of H_j; `boundaries[j]` is a basis of im d_{j+1}.  Together
    they let `class_coordinates` project any cycle to its homology class,
    which is how induced maps on homology are computed.
    """

    complex: ChainComplex
    betti: GradedVS
    representatives: dict[int, MatrixQ] = field(repr=False)
    boundaries: dict[int, MatrixQ] = field(repr=False)

    def class_coordinates(self, j: int, cycle: Mapping[int, Fraction]) -> dict:
        """Coordinates of the class of `cycle` in the degree-j basis."""
        reps = self.representatives.get(j)
        b = self.betti[j]
        if reps is None or b == 0:
            return {}
        bnd = self.boundaries.get(j, MatrixQ.zeros(self.complex.spaces[j], 0))
        x = solve(hstack([reps, bnd]), cycle)
        if x is None:
            raise ValueError("vector is not a cycle of this complex")
        return {i: v for i, v in x.items() if i < b and v}


def _extend_basis(inside: list[dict], candidates: list[dict],
                  ambient: int) -> list[dict]:
    """Pick candidates extending span(inside) to span(inside + candidates)."""
    span = IncrementalSpan(ambient)
    for v in inside:
        span.add(v)
    return [v for v in candidates if span.add(v)]


def _compute_homology(c: ChainComplex) -> HomologyData:
    betti = {}
    reps: dict[int, MatrixQ] = {}
    bnds: dict[int, MatrixQ] = {}
    degs = c.spaces.degrees()
    for j in degs:
        n = c.spaces[j]
        z = kernel_basis(c.differential(j))
        b = image_basis(c.differential(j + 1))
        betti[j] = z.dim - b.dim
        if b.dim:
            bnds[j] = b.as_matrix()
        if betti[j]:
            chosen = _extend_basis(list(b.basis), list(z.basis), n)
            assert len(chosen) == betti[j]
            entries = {}
            for col, vec in enumerate(chosen):
                for i, v in vec.items():
                    entries[(i, col)] = v
            reps[j] = MatrixQ(n, betti[j], entries)
    return HomologyData(complex=c, betti=GradedVS(betti),
                        representatives=reps, boundaries=bnds)


def reduced_homology(c: ChainComplex) -> GradedVS:
    """Homology with one dimension removed in degree 0 by the augmentation.

    Requires a nonempty degree-0 space and an augmentation-compatible d_1
    (all column sums of d_1 vanish), which holds for every simplicial chain
    complex.
    """
    if c.spaces[0] < 1:
        raise ValueError("reduced homology needs a nonempty degree-0 space")
    d1 = c.differential(1)
    colsums: dict[int, Fraction] = {}
    for (i, j), v in d1.items():
        colsums[j] = colsums.get(j, Fraction(0)) + v
    if any(colsums.values()):
        raise ValueError("d_1 is not compatible with the augmentation")
    h = c.homology()
    out = {j: h[j] for j in h.degrees()}
    out[0] = h[0] - 1
    assert out[0] >= 0
    return GradedVS(out)


class ChainMap:
    """A degreewise map of chain complexes commuting with the differentials."""

    __slots__ = ("source", "target", "_blocks")

    def __init__(self, source: ChainComplex, target: ChainComplex,
                 blocks: Mapping[int, MatrixQ] | None = None):
        self.source = source
        self.target = target
        b = {}
        for j, m in (blocks or {}).items():
            if (m.rows, m.cols) != (target.spaces[j], source.spaces[j]):
                raise DimensionMismatch(
                    f"chain map block in degree {j} has wrong shape")
            if not m.is_zero():
                b[int(j)] = m
        self._blocks = b
        degs = set(source.spaces.degrees()) | set(target.spaces.degrees())
        for j in degs:
            lhs = target.differential(j) @ self.block(j)
            rhs = self.block(j - 1) @ source.differential(j)
            if lhs != rhs:
                raise ValueError(f"chain map does not commute with d in degree {j}")

    def block(self, j: int) -> MatrixQ:
        return self._blocks.get(
            j, MatrixQ.zeros(self.target.spaces[j], self.source.spaces[j]))

    def __repr__(self) -> str:
        return f"ChainMap({self.source!r} -> {self.target!r})"


def induced_map(f: ChainMap) -> GradedMap:
    """The map induced by a chain map on homology, in the chosen bases."""
    hs = f.source.homology_data()
    ht = f.target.homology_data()
    blocks = {}
    for j in hs.betti.degrees():
        bs, bt = hs.betti[j], ht.betti[j]
        if bs == 0 or bt == 0:
            continue
        reps = hs.representatives[j]
        fj = f.block(j)
        entries = {}
        for col in range(bs):
            img = fj @ MatrixQ(fj.cols, 1, {(i, 0): v
                                            for i, v in reps.column(col).items()})
            coords = ht.class_coordinates(j, img.column(0))
            for i, v in coords.items():
                entries[(i, col)] = v
        blocks[j] = MatrixQ(bt, bs, entries)
    return GradedMap(hs.betti, ht.betti, blocks)


def mapping_cone(f: ChainMap) -> ChainComplex:
    """The algebraic mapping cone: cone(f)_j = source_{j-1} (+) target_j.

    Its homology is the reduced homology of the topological mapping cone;
    dimensionwise dim H_j(cone f) = dim coker H_j(f) + dim ker H_{j-1}(f).
    """
    src, tgt = f.source.spaces, f.target.spaces
    degs = set(src.degrees()) | set(tgt.degrees())
    if not degs:
        return ChainComplex(GradedVS())
    lo, hi = min(degs), max(degs) + 1
    spaces = GradedVS({j: src[j - 1] + tgt[j] for j in range(lo, hi + 1)})
    diffs = {}
    for j in range(lo, hi + 1):
        entries = {}
        ds = f.source.differential(j - 1)      # source_{j-1} -> source_{j-2}
        dt = f.target.differential(j)          # target_j -> target_{j-1}
        fj = f.block(j - 1)                    # source_{j-1} -> target_{j-1}
        for (r, c), v in ds.items():
            entries[(r, c)] = -v
        roff = src[j - 2]
        for (r, c), v in fj.items():
            entries[(r + roff, c)] = -v
        coff = src[j - 1]
        for (r, c), v in dt.items():
            entries[(r + roff, c + coff)] = v
        m = MatrixQ(spaces[j - 1], spaces[j], entries)
        if not m.is_zero():
            diffs[j] = m
    return ChainComplex(spaces, diffs)


def tensor_complex(a: ChainComplex, b: ChainComplex) -> ChainComplex:
    """Tensor product with the Koszul-sign differential d(x)1 + (-1)^p 1(x)d.

    Degree-j basis: blocks by ascending b-degree q, inside a block the pairs
    (a-index, b-index) in lexicographic order.
    """
    adims, bdims = a.spaces, b.spaces
    if adims.is_zero() or bdims.is_zero():
        return ChainComplex(GradedVS())
    top = adims.top + bdims.top
    spaces = GradedVS({j: sum(adims[j - q] * bdims[q] for q in range(0, j + 1))
                       for j in range(0, top + 1)})

    def offset(j: int, q: int) -> int:
        return sum(adims[j - t] * bdims[t] for t in range(0, q))

    def index(j: int, q: int, ia: int, ib: int) -> int:
        return offset(j, q) + ia * bdims[q] + ib

    diffs = {}
    for j in range(1, top + 1):
        entries = {}
        for q in range(0, j + 1):
            p = j - q
            if adims[p] == 0 or bdims[q] == 0:
                continue
            da = a.differential(p)   # a_p -> a_{p-1}
            for (r, ccol), v in da.items():
                for ib in range(bdims[q]):
                    entries[(index(j - 1, q, r, ib),
                             index(j, q, ccol, ib))] = v
            db = b.differential(q)   # b_q -> b_{q-1}
            sign = -1 if p % 2 else 1
            for (r, ccol), v in db.items():
                for ia in range(adims[p]):
                    key = (index(j - 1, q - 1, ia, r), index(j, q, ia, ccol))
                    entries[key] = entries.get(key, Fraction(0)) + sign * v
        m = MatrixQ(spaces[j - 1], spaces[j], entries)
        if not m.is_zero():
            diffs[j] = m
    return ChainComplex(spaces, diffs)
