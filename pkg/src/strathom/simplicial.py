"""Finite simplicial complexes and the chain-level machinery built on them.

Provides ingestion from top simplices, boundary matrices with signs taken
from a single global vertex order, cones and suspensions with the apex set
flagged as the singular stratum, barycentric subdivision, the staircase
triangulation of products, the brute-force intersection-homology oracle
`ih_direct`, and the middle-degree cup-product pairing used for Novikov
signatures.

`ih_direct` computes the homology of allowable chains under King's
allowability condition specialized to linear simplices (a simplex meets the
singular set in the face spanned by its singular vertices), with the
boundary operator truncated below the singular set.  Chains supported
entirely inside the singular set are quotiented away, which is what makes
the cone formula come out right in every degree for arbitrarily large
perversity values; see the module's tests for the cone/suspension family
this is pinned against.
"""

from __future__ import annotations

from fractions import Fraction
from itertools import combinations
from typing import Iterable, Mapping, Sequence

from .chains import ChainComplex, GradedVS
from .qlinalg import IncrementalSpan, MatrixQ, image_basis, kernel_basis, rank

Simplex = tuple[int, ...]  # vertex indices, strictly increasing


class OrientationError(ValueError):
    """The complex is not an orientable pseudomanifold, or the supplied
    orientation is incoherent."""


class SimplicialComplex:
    """A finite simplicial complex over an ordered vertex list.

    The vertex order is part of the data: it fixes the sign conventions of
    every boundary matrix and of the front-face/back-face cup product.
    Simplices are stored per dimension as sorted tuples of vertex indices,
    listed lexicographically.
    """

    __slots__ = ("vertices", "_by_dim", "_index", "_simplex_set")

    def __init__(self, vertices: Sequence[str], top_simplices: Iterable[Sequence[str]]):
        self.vertices = tuple(str(v) for v in vertices)
        if len(set(self.vertices)) != len(self.vertices):
            raise ValueError("duplicate vertex labels")
        vidx = {v: i for i, v in enumerate(self.vertices)}
        closure: set[Simplex] = set()
        for top in top_simplices:
            try:
                idx = tuple(sorted(vidx[str(v)] for v in top))
            except KeyError as e:
                raise ValueError(f"top simplex uses unknown vertex {e}") from None
            if len(set(idx)) != len(idx):
                raise ValueError(f"degenerate simplex {tuple(top)}")
            for r in range(1, len(idx) + 1):
                closure.update(combinations(idx, r))
        by_dim: dict[int, list[Simplex]] = {}
        for s in closure:
            by_dim.setdefault(len(s) - 1, []).append(s)
        self._by_dim = {d: tuple(sorted(v)) for d, v in by_dim.items()}
        self._index = {d: {s: k for k, s in enumerate(v)}
                       for d, v in self._by_dim.items()}
        self._simplex_set = closure

    @property
    def dim(self) -> int:
        return max(self._by_dim) if self._by_dim else -1

    def simplices(self, d: int) -> tuple[Simplex, ...]:
        return self._by_dim.get(d, ())

    def n_simplices(self, d: int) -> int:
        return len(self._by_dim.get(d, ()))

    def index_of(self, s: Simplex) -> int:
        return self._index[len(s) - 1][s]

    def has_simplex(self, s: Simplex) -> bool:
        return s in self._simplex_set

    def labels(self, s: Simplex) -> tuple[str, ...]:
        return tuple(self.vertices[i] for i in s)

    def f_vector(self) -> tuple[int, ...]:
        return tuple(self.n_simplices(d) for d in range(self.dim + 1))

    def __repr__(self) -> str:
        return f"SimplicialComplex(f={self.f_vector()})"


def boundary_matrix(s: SimplicialComplex, d: int) -> MatrixQ:
    """Matrix of the boundary operator C_d -> C_{d-1} with standard signs."""
    entries = {}
    lower = s._index.get(d - 1, {})
    for col, simplex in enumerate(s.simplices(d)):
        for i in range(len(simplex)):
            face = simplex[:i] + simplex[i + 1:]
            entries[(lower[face], col)] = Fraction((-1) ** i)
    return MatrixQ(s.n_simplices(d - 1), s.n_simplices(d), entries)


def chain_complex_of(s: SimplicialComplex) -> ChainComplex:
    """The simplicial chain complex with the global-vertex-order signs."""
    spaces = GradedVS({d: s.n_simplices(d) for d in range(s.dim + 1)})
    diffs = {d: boundary_matrix(s, d) for d in range(1, s.dim + 1)}
    return ChainComplex(spaces, diffs)


class StratifiedComplex:
    """A simplicial complex with a flagged singular vertex set.

    `sigma` spans the singular subcomplex (all simplices whose vertices lie
    in sigma); `codim` is the codimension of the singular stratum, the c at
    which the perversity is evaluated.
    """

    __slots__ = ("complex", "sigma", "codim")

    def __init__(self, complex: SimplicialComplex, sigma: Iterable[str], codim: int):
        self.complex = complex
        labels = set(str(v) for v in sigma)
        unknown = labels - set(complex.vertices)
        if unknown:
            raise ValueError(f"sigma contains unknown vertices {sorted(unknown)}")
        if codim < 1:
            raise ValueError("codimension must be >= 1")
        self.sigma = frozenset(i for i, v in enumerate(complex.vertices)
                               if v in labels)
        self.codim = codim

    def sigma_labels(self) -> tuple[str, ...]:
        return tuple(self.complex.vertices[i] for i in sorted(self.sigma))

    def __repr__(self) -> str:
        return (f"StratifiedComplex({self.complex!r}, |sigma|={len(self.sigma)}, "
                f"codim={self.codim})")


def cone(s: SimplicialComplex, apex: str = "*") -> StratifiedComplex:
    """Cone with one new apex vertex; the apex is the singular set."""
    if s.dim < 0:
        raise ValueError("cannot cone the empty complex")
    while apex in s.vertices:
        apex += "'"
    vertices = s.vertices + (apex,)
    # joining apex to every simplex keeps lower-dimensional maximal ones too
    all_tops = []
    for d in range(s.dim + 1):
        for t in s.simplices(d):
            all_tops.append(s.labels(t) + (apex,))
    return StratifiedComplex(SimplicialComplex(vertices, all_tops),
                             [apex], s.dim + 1)


def suspension(s: SimplicialComplex, north: str = "N*",
               south: str = "S*") -> StratifiedComplex:
    """Suspension with two new apexes; both are flagged singular."""
    if s.dim < 0:
        raise ValueError("cannot suspend the empty complex")
    while north in s.vertices:
        north += "'"
    while south in s.vertices or south == north:
        south += "'"
    vertices = s.vertices + (north, south)
    all_tops = []
    for d in range(s.dim + 1):
        for t in s.simplices(d):
            all_tops.append(s.labels(t) + (north,))
            all_tops.append(s.labels(t) + (south,))
    return StratifiedComplex(SimplicialComplex(vertices, all_tops),
                             [north, south], s.dim + 1)


# ---------------------------------------------------------------------------
# barycentric subdivision

def _barycenter_label(s: SimplicialComplex, simplex: Simplex) -> str:
    return "<" + ".".join(s.labels(simplex)) + ">"


def barycentric_complex(s: SimplicialComplex) -> tuple[SimplicialComplex, dict]:
    """The barycentric subdivision and the map simplex -> new vertex label.

    New vertices are the barycenters of old simplices, ordered by (dimension,
    lexicographic index tuple); new top simplices are the maximal flags of
    the face poset.  Because barycenters of lower-dimensional faces come
    first in the vertex order, every flag is already sorted, which keeps
    orientation bookkeeping straightforward.
    """
    order: list[Simplex] = []
    for d in range(s.dim + 1):
        order.extend(s.simplices(d))
    label = {simplex: _barycenter_label(s, simplex) for simplex in order}
    vertices = [label[simplex] for simplex in order]

    flags: list[tuple[str, ...]] = []

    def descend(chain: list[Simplex]):
        smallest = chain[-1]
        if len(smallest) == 1:
            flags.append(tuple(label[c] for c in reversed(chain)))
            return
        for face in combinations(smallest, len(smallest) - 1):
            descend(chain + [face])

    for d in range(s.dim + 1):
        for top in s.simplices(d):
            # only maximal simplices generate flags; non-maximal ones are
            # covered by the closure of the maximal flags
            if any(set(top) < set(other)
                   for dd in range(d + 1, s.dim + 1)
                   for other in s.simplices(dd)):
                continue
            descend([top])
    return SimplicialComplex(vertices, flags), label


def barycentric_subdivide(st: StratifiedComplex) -> StratifiedComplex:
    """Subdivide once; sigma becomes the subdivision of the sigma subcomplex."""
    sub, label = barycentric_complex(st.complex)
    sigma_labels = [label[simplex]
                    for d in range(st.complex.dim + 1)
                    for simplex in st.complex.simplices(d)
                    if set(simplex) <= st.sigma]
    return StratifiedComplex(sub, sigma_labels, st.codim)


# ---------------------------------------------------------------------------
# the brute-force intersection homology oracle

def ih_direct(st: StratifiedComplex, p_at_c: int) -> GradedVS:
    """Intersection homology of a stratified complex, by brute force.

    A linear i-simplex is allowable iff the face it spans inside the
    singular set has dimension <= i - codim + p(codim) (no singular
    vertices means dimension -infinity, always allowable).  The boundary
    operator drops all summands supported in the singular set, and chains
    supported in the singular set are themselves quotiented away, matching
    the relative-chain formulation that keeps the cone formula anomaly-free
    for arbitrary integer perversities.
    """
    K = st.complex
    c = st.codim
    sigma = st.sigma

    def sigma_face_dim(simplex: Simplex) -> int | None:
        k = sum(1 for v in simplex if v in sigma)
        return k - 1 if k else None

    allowable: dict[int, list[int]] = {}
    interior: dict[int, set[int]] = {}
    for d in range(K.dim + 1):
        allow, inter = [], set()
        for idx, simplex in enumerate(K.simplices(d)):
            fd = sigma_face_dim(simplex)
            if fd == d:
                inter.add(idx)      # supported in the singular set: quotient out
            elif fd is None or fd <= d - c + p_at_c:
                allow.append(idx)
        allowable[d] = allow
        interior[d] = inter

    # basis matrices of the allowable subspaces and the truncated boundary
    def restricted_boundary(d: int, rows_keep: list[int]) -> MatrixQ:
        bd = boundary_matrix(K, d)
        rowpos = {r: k for k, r in enumerate(rows_keep)}
        entries = {}
        for (i, j), v in bd.items():
            if i in rowpos:
                entries[(rowpos[i], j)] = v
        return MatrixQ(len(rows_keep), K.n_simplices(d), entries)

    # IC_d = allowable chains whose truncated boundary is again allowable
    ic_basis: dict[int, MatrixQ] = {}
    for d in range(K.dim + 1):
        cols = allowable[d]
        ncols = len(cols)
        if ncols == 0:
            ic_basis[d] = MatrixQ.zeros(K.n_simplices(d), 0)
            continue
        incl = MatrixQ(K.n_simplices(d), ncols,
                       {(r, k): Fraction(1) for k, r in enumerate(cols)})
        if d == 0:
            ic_basis[d] = incl
            continue
        allowed_below = set(allowable[d - 1])
        bad_rows = [i for i in range(K.n_simplices(d - 1))
                    if i not in interior[d - 1] and i not in allowed_below]
        if not bad_rows:
            ic_basis[d] = incl
            continue
        cond = restricted_boundary(d, bad_rows) @ incl
        ker = kernel_basis(cond)
        ic_basis[d] = incl @ ker.as_matrix()

    # homology of (IC_*, truncated boundary)
    dims = {}
    ranks = {}
    for d in range(1, K.dim + 1):
        keep = [i for i in range(K.n_simplices(d - 1)) if i not in interior[d - 1]]
        ranks[d] = rank(restricted_boundary(d, keep) @ ic_basis[d])
    for d in range(K.dim + 1):
        dims[d] = ic_basis[d].cols - ranks.get(d, 0) - ranks.get(d + 1, 0)
        assert dims[d] >= 0
    return GradedVS(dims)


# ---------------------------------------------------------------------------
# staircase product triangulations

def product_complex(a: SimplicialComplex, b: SimplicialComplex,
                    sep: str = ",") -> SimplicialComplex:
    """The staircase triangulation of |a| x |b|.

    Vertices are pairs ordered lexicographically by factor indices; the top
    cells over each pair of facets are the monotone staircase paths.  This
    is the Eilenberg-Zilber triangulation, so faces of staircase cells are
    staircase cells of faces and the union over facet pairs is a complex.
    """
    verts = [f"{u}{sep}{v}" for u in a.vertices for v in b.vertices]

    def pair_label(iu: int, iv: int) -> str:
        return f"{a.vertices[iu]}{sep}{b.vertices[iv]}"

    def facets(c: SimplicialComplex):
        for d in range(c.dim + 1):
            for t in c.simplices(d):
                if not any(set(t) < set(o) for dd in range(d + 1, c.dim + 1)
                           for o in c.simplices(dd)):
                    yield t

    tops = []
    for sa in facets(a):
        p = len(sa) - 1
        for sb in facets(b):
            q = len(sb) - 1
            for a_steps in combinations(range(p + q), p):
                ia = ib = 0
                path = [pair_label(sa[0], sb[0])]
                for step in range(p + q):
                    if step in a_steps:
                        ia += 1
                    else:
                        ib += 1
                    path.append(pair_label(sa[ia], sb[ib]))
                tops.append(tuple(path))
    return SimplicialComplex(verts, tops)


# ---------------------------------------------------------------------------
# oriented pseudomanifolds with boundary and the cup-product pairing

class OrientedPseudomanifoldWithBoundary:
    """A triangulated oriented pseudomanifold with (possibly empty) boundary.

    Construction checks that every interior codimension-1 simplex has
    exactly two top cofaces and every boundary one exactly one, and that
    the fundamental chain's boundary is supported in the boundary
    subcomplex.  If no orientation is supplied, one is propagated from the
    lexicographically first facet.
    """

    __slots__ = ("complex", "boundary", "orientation")

    def __init__(self, complex: SimplicialComplex,
                 boundary_simplices: Iterable[Sequence[str]] = (),
                 orientation: Mapping[Simplex, int] | Sequence[int] | None = None):
        self.complex = complex
        n = complex.dim
        vidx = {v: i for i, v in enumerate(complex.vertices)}
        bset: set[Simplex] = set()
        for bs in boundary_simplices:
            s = tuple(sorted(vidx[str(v)] for v in bs))
            if not complex.has_simplex(s):
                raise ValueError(f"boundary simplex {tuple(bs)} not in complex")
            for r in range(1, len(s) + 1):
                bset.update(combinations(s, r))
        self.boundary = frozenset(bset)

        tops = complex.simplices(n)
        cofaces: dict[Simplex, list[int]] = {}
        for t_i, t in enumerate(tops):
            for i in range(len(t)):
                face = t[:i] + t[i + 1:]
                cofaces.setdefault(face, []).append(t_i)
        for face, cf in cofaces.items():
            expected = 1 if face in self.boundary else 2
            if len(cf) != expected:
                raise OrientationError(
                    f"codimension-1 simplex {complex.labels(face)} has "
                    f"{len(cf)} top cofaces, expected {expected}")

        if orientation is None:
            signs = self._propagate(tops, cofaces)
        elif isinstance(orientation, Mapping):
            signs = {t: int(orientation[t]) for t in tops}
        else:
            signs = {t: int(x) for t, x in zip(tops, orientation, strict=True)}
        if any(x not in (1, -1) for x in signs.values()):
            raise OrientationError("orientation signs must be +-1")
        self.orientation = signs
        self._check_fundamental_chain()

    def _propagate(self, tops, cofaces) -> dict[Simplex, int]:
        n = self.complex.dim
        signs: dict[Simplex, int] = {}
        for seed in tops:
            if seed in signs:
                continue
            signs[seed] = 1
            stack = [seed]
            while stack:
                t = stack.pop()
                for i in range(len(t)):
                    face = t[:i] + t[i + 1:]
                    for other_i in cofaces[face]:
                        other = tops[other_i]
                        if other == t:
                            continue
                        j = other.index(tuple(set(other) - set(face))[0])
                        # coherent: induced boundary orientations must cancel;
                        # face carries sign (-1)**i in t and (-1)**j in other
                        induced_here = (-1) ** i * signs[t]
                        s_other = -induced_here * (1 if j % 2 == 0 else -1)
                        if other in signs:
                            if signs[other] != s_other:
                                raise OrientationError(
                                    "complex is not orientable")
                        else:
                            signs[other] = s_other
                            stack.append(other)
        return signs

    def _check_fundamental_chain(self):
        n = self.complex.dim
        bd = boundary_matrix(self.complex, n)
        fund = MatrixQ(self.complex.n_simplices(n), 1,
                       {(self.complex.index_of(t), 0): Fraction(s)
                        for t, s in self.orientation.items()})
        result = bd @ fund
        lower = self.complex.simplices(n - 1)
        for (i, _), v in result.items():
            if v and lower[i] not in self.boundary:
                raise OrientationError(
                    "fundamental chain boundary leaks outside the boundary "
                    f"subcomplex at {self.complex.labels(lower[i])}")

    def fundamental_chain(self) -> dict[int, Fraction]:
        return {self.complex.index_of(t): Fraction(s)
                for t, s in self.orientation.items()}

    def reversed_orientation(self) -> "OrientedPseudomanifoldWithBoundary":
        flipped = {t: -s for t, s in self.orientation.items()}
        out = object.__new__(OrientedPseudomanifoldWithBoundary)
        out.complex = self.complex
        out.boundary = self.boundary
        out.orientation = flipped
        return out

    def __repr__(self) -> str:
        return (f"OrientedPseudomanifoldWithBoundary(dim={self.complex.dim}, "
                f"facets={self.complex.n_simplices(self.complex.dim)})")


class PairingData:
    """A middle-degree pairing matrix together with its provenance note."""

    __slots__ = ("degree", "matrix", "basis_note")

    def __init__(self, degree: int, matrix: MatrixQ, basis_note: str = ""):
        if matrix.rows != matrix.cols:
            raise ValueError("pairing matrix must be square")
        self.degree = degree
        self.matrix = matrix
        self.basis_note = basis_note

    def __repr__(self) -> str:
        return f"PairingData(degree={self.degree}, size={self.matrix.rows})"


def _cohomology_reps(delta_out: MatrixQ, delta_in: MatrixQ) -> list[dict]:
    """Representative cocycles for ker(delta_out)/im(delta_in)."""
    z = kernel_basis(delta_out)
    b = image_basis(delta_in)
    span = IncrementalSpan(delta_out.cols)
    for v in b.basis:
        span.add(v)
    return [v for v in z.basis if span.add(dict(v))]


def cup_pairing(m: OrientedPseudomanifoldWithBoundary, degree: int) -> PairingData:
    """The middle-degree cup-product pairing against the fundamental chain.

    Both slots run over a cocycle basis of H^m(K, bd K); the second factor
    is regarded in absolute cohomology.  Entry (i, j) is
    <a_i cup a_j, fundamental chain> with the ordered front-face/back-face
    cup product in the global vertex order.  The matrix is symmetric for
    even m and its signature is the Novikov signature of the complex.
    """
    K = m.complex
    n = K.dim
    if 2 * degree != n:
        raise ValueError(f"degree {degree} is not the middle of dimension {n}")

    def rel_cols(d: int) -> list[int]:
        return [i for i, s in enumerate(K.simplices(d)) if s not in m.boundary]

    def rel_delta(d: int) -> MatrixQ:
        """delta: relative C^d -> relative C^{d+1} (transpose of boundary)."""
        cols_d = rel_cols(d)
        cols_d1 = rel_cols(d + 1)
        pos_d = {i: k for k, i in enumerate(cols_d)}
        pos_d1 = {i: k for k, i in enumerate(cols_d1)}
        bd = boundary_matrix(K, d + 1)
        entries = {}
        for (i, j), v in bd.items():
            if i in pos_d and j in pos_d1:
                entries[(pos_d1[j], pos_d[i])] = v
        return MatrixQ(len(cols_d1), len(cols_d), entries)

    reps_rel = _cohomology_reps(rel_delta(degree), rel_delta(degree - 1))
    cols = rel_cols(degree)

    # absolute cohomology dimension, reported alongside the pairing
    def abs_delta(d: int) -> MatrixQ:
        return boundary_matrix(K, d + 1).transpose()

    z_abs = abs_delta(degree)
    abs_dim = (z_abs.cols - rank(z_abs)) - rank(abs_delta(degree - 1))

    # cocycles as {simplex index: coefficient} over all degree-m simplices
    cocycles = []
    for v in reps_rel:
        cocycles.append({cols[k]: x for k, x in v.items()})

    fund = m.fundamental_chain()
    tops = K.simplices(n)
    midx = K._index.get(degree, {})
    r = len(cocycles)
    entries = {}
    for ti, coeff in fund.items():
        t = tops[ti]
        front = midx[t[:degree + 1]]
        back = midx[t[degree:]]
        for i, a in enumerate(cocycles):
            va = a.get(front)
            if not va:
                continue
            for j, b in enumerate(cocycles):
                vb = b.get(back)
                if not vb:
                    continue
                key = (i, j)
                s = entries.get(key, Fraction(0)) + coeff * va * vb
                if s:
                    entries[key] = s
                elif key in entries:
                    del entries[key]
    matrix = MatrixQ(r, r, entries)
    note = (f"H^{degree}(K, bd) rank {r}; H^{degree}(K) rank {abs_dim}; "
            "rows and columns index relative cocycle representatives, second "
            "slot taken in absolute cohomology")
    if degree % 2 == 0 and not matrix.is_symmetric():
        raise OrientationError("even-degree cup pairing came out asymmetric; "
                               "the input is not a coherent pseudomanifold")
    return PairingData(degree, matrix, note)
