import random
from fractions import Fraction

import pytest

from strathom.chains import (
    ChainComplex,
    ChainMap,
    GradedMap,
    GradedVS,
    induced_map,
    les_third_dims,
    mapping_cone,
    reduced_homology,
    tensor_complex,
    truncate_graded,
)
from strathom.qlinalg import MatrixQ

from oracles import convolve, rank_int_oracle


def circle_complex():
    # 3-vertex circle: vertices a,b,c; edges ab, ac, bc
    d1 = MatrixQ.from_rows([
        [-1, -1, 0],
        [1, 0, -1],
        [0, 1, 1],
    ])
    return ChainComplex(GradedVS([3, 3]), {1: d1})


def point_complex():
    return ChainComplex(GradedVS([1]))


def torus7_boundaries():
    # 7-vertex (Moebius) torus: facets {i,i+1,i+3} and {i,i+2,i+3} mod 7
    verts = list(range(7))
    tris = sorted(
        [tuple(sorted(((i) % 7, (i + 1) % 7, (i + 3) % 7))) for i in range(7)]
        + [tuple(sorted(((i) % 7, (i + 2) % 7, (i + 3) % 7))) for i in range(7)]
    )
    edges = sorted({(a, b) for tri in tris for a in tri for b in tri if a < b})
    eidx = {e: k for k, e in enumerate(edges)}
    d1 = {}
    for k, (a, b) in enumerate(edges):
        d1[(a, k)] = d1.get((a, k), 0) - 1
        d1[(b, k)] = d1.get((b, k), 0) + 1
    d2 = {}
    for k, (a, b, c) in enumerate(tris):
        d2[(eidx[(b, c)], k)] = 1
        d2[(eidx[(a, c)], k)] = -1
        d2[(eidx[(a, b)], k)] = 1
    return (
        MatrixQ(7, len(edges), d1),
        MatrixQ(len(edges), len(tris), d2),
        len(edges),
        len(tris),
    )


def torus_complex():
    d1, d2, ne, nt = torus7_boundaries()
    return ChainComplex(GradedVS([7, ne, nt]), {1: d1, 2: d2})


def test_homology_circle():
    # oracle: rank of the 3x3 vertex-edge boundary matrix is 2
    d1, = [circle_complex().differential(1)]
    assert rank_int_oracle([[int(x) for x in row] for row in d1.to_rows()]) == 2
    assert circle_complex().homology() == GradedVS([1, 1])


def test_homology_torus():
    d1, d2, ne, nt = torus7_boundaries()
    # independent modular rank oracle for both boundary matrices
    r1 = rank_int_oracle([[int(x) for x in r] for r in d1.to_rows()])
    r2 = rank_int_oracle([[int(x) for x in r] for r in d2.to_rows()])
    assert (7 - r1, ne - r1 - r2, nt - r2) == (1, 2, 1)
    assert torus_complex().homology() == GradedVS([1, 2, 1])


def test_homology_zero_differentials():
    c = ChainComplex(GradedVS([2, 5, 1]))
    assert c.homology() == GradedVS([2, 5, 1])


def test_dd_zero_enforced():
    bad = MatrixQ.from_rows([[1], [0]])
    d1 = MatrixQ.from_rows([[1, 1]])
    with pytest.raises(ValueError):
        ChainComplex(GradedVS({0: 1, 1: 2, 2: 1}),
                     {1: d1, 2: bad})


def test_reduced_homology():
    assert reduced_homology(point_complex()) == GradedVS()
    assert reduced_homology(ChainComplex(GradedVS([2]))) == GradedVS([1])
    assert reduced_homology(circle_complex()) == GradedVS([0, 1])
    with pytest.raises(ValueError):
        reduced_homology(ChainComplex(GradedVS({1: 2})))


def test_mapping_cone_of_identity_is_acyclic():
    for c in (circle_complex(), torus_complex()):
        ident = ChainMap(c, c, {j: MatrixQ.identity(c.spaces[j])
                                for j in c.spaces.degrees()})
        assert mapping_cone(ident).homology().is_zero()


def test_mapping_cone_of_zero_from_empty():
    src = ChainComplex(GradedVS())
    tgt = circle_complex()
    f = ChainMap(src, tgt)
    assert mapping_cone(f).homology() == tgt.homology()


def test_mapping_cone_point_into_circle():
    # chain model of the stage-1 approximation of a circle: a single vertex
    src = point_complex()
    tgt = circle_complex()
    f = ChainMap(src, tgt, {0: MatrixQ.from_rows([[1], [0], [0]])})
    assert mapping_cone(f).homology() == GradedVS([0, 1])


def test_tensor_with_point_is_identity_on_dims():
    c = torus_complex()
    t = tensor_complex(point_complex(), c)
    assert t.homology() == c.homology()
    t = tensor_complex(c, point_complex())
    assert t.homology() == c.homology()


def test_tensor_circle_circle_and_circle_torus():
    s1 = circle_complex()
    assert tensor_complex(s1, s1).homology() == GradedVS([1, 2, 1])
    assert tensor_complex(s1, torus_complex()).homology() == GradedVS([1, 3, 3, 1])


def _random_complex(rng, max_top=3, max_dim=3):
    """Random complex with known homology: sum of elementary pieces,
    conjugated by random invertible triangular-ish integer matrices.

    Degree-m layout: [betti[m] | sources of d_m | targets of d_{m+1}].
    """
    top = rng.randrange(0, max_top + 1)
    betti = {j: rng.randrange(0, max_dim + 1) for j in range(0, top + 1)}
    ks = {j: rng.randrange(0, max_dim) for j in range(1, top + 1)}
    dims = {m: betti[m] + ks.get(m, 0) + ks.get(m + 1, 0)
            for m in range(0, top + 1)}
    diffs = {}
    for j in range(1, top + 1):
        entries = {}
        for i in range(ks[j]):
            entries[(betti[j - 1] + ks.get(j - 1, 0) + i, betti[j] + i)] = 1
        if entries:
            diffs[j] = MatrixQ(dims[j - 1], dims[j], entries)
    spaces = GradedVS(dims)
    c = ChainComplex(spaces, diffs)
    # change of basis in every degree
    ps = {}
    for j in range(0, top + 1):
        n = spaces[j]
        p = MatrixQ.identity(n)
        for _ in range(n):
            a, b2 = rng.randrange(n), rng.randrange(n)
            if a == b2:
                continue
            e = MatrixQ.identity(n) + MatrixQ(n, n, {(a, b2): rng.choice([-1, 1])})
            p = p @ e
        ps[j] = p
    new_diffs = {}
    for j in range(1, top + 1):
        d = ps[j - 1] @ c.differential(j) @ _inverse(ps[j])
        if not d.is_zero():
            new_diffs[j] = d
    return ChainComplex(spaces, new_diffs), GradedVS(betti)


def _inverse(p: MatrixQ) -> MatrixQ:
    from strathom.qlinalg import solve
    n = p.rows
    entries = {}
    for j in range(n):
        x = solve(p, {j: 1})
        for i, v in x.items():
            entries[(i, j)] = v
    return MatrixQ(n, n, entries)


def test_euler_characteristic_invariance():
    rng = random.Random(5)
    for _ in range(20):
        c, betti = _random_complex(rng)
        assert c.homology() == betti
        assert c.euler() == c.homology().euler()


def test_kunneth_on_random_complexes():
    rng = random.Random(17)
    for _ in range(15):
        a, ba = _random_complex(rng, max_top=2, max_dim=2)
        b, bb = _random_complex(rng, max_top=2, max_dim=2)
        t = tensor_complex(a, b)
        expected = [0] * (max(ba.top, 0) + max(bb.top, 0) + 1)
        conv = convolve([ba[j] for j in range(ba.top + 1)],
                        [bb[j] for j in range(bb.top + 1)])
        assert list(t.homology().as_tuple(0, len(expected) - 1))[:len(conv)] == conv \
            or t.homology() == GradedVS(conv)


def test_cone_les_dimension_identity():
    rng = random.Random(23)
    for _ in range(15):
        a, _ = _random_complex(rng, max_top=2, max_dim=2)
        b, _ = _random_complex(rng, max_top=2, max_dim=2)
        blocks = {}
        for j in set(a.spaces.degrees()) & set(b.spaces.degrees()):
            blocks[j] = MatrixQ(b.spaces[j], a.spaces[j])
        f = ChainMap(a, b, blocks)  # zero map always commutes
        cone = mapping_cone(f)
        hf = induced_map(f)
        for j in range(0, cone.spaces.top + 1):
            expected = hf.coker_dim(j) + hf.kernel_dim(j - 1)
            assert cone.homology()[j] == expected


def test_cone_les_identity_for_nonzero_maps():
    # inclusion of a circle into a disk-like complex kills H_1
    s1 = circle_complex()
    disk = ChainComplex(
        GradedVS([3, 3, 1]),
        {1: s1.differential(1),
         2: MatrixQ.from_rows([[1], [-1], [1]])})
    inc = ChainMap(s1, disk, {0: MatrixQ.identity(3), 1: MatrixQ.identity(3)})
    cone = mapping_cone(inc)
    hf = induced_map(inc)
    for j in range(0, 3):
        assert cone.homology()[j] == hf.coker_dim(j) + hf.kernel_dim(j - 1)


def test_truncate_graded():
    v = GradedVS([1, 2, 1])
    assert truncate_graded(v, "le", 1) == GradedVS([1, 2])
    assert truncate_graded(v, "ge", 2) == GradedVS({2: 1})
    assert truncate_graded(v, "ge", 0) == v
    assert truncate_graded(v, "ge", -3) == v
    for a in range(-1, 4):
        assert truncate_graded(v, "le", a) + truncate_graded(v, "ge", a + 1) == v


def test_les_third_dims():
    v2 = GradedVS([2, 2])
    ident = GradedMap(v2, v2, {0: MatrixQ.identity(2), 1: MatrixQ.identity(2)})
    assert les_third_dims(ident).is_zero()
    beta = GradedMap(GradedVS([1]), GradedVS([2]))
    assert les_third_dims(beta) == GradedVS([2, 1])


def test_induced_map_by_hand():
    s1 = circle_complex()
    # multiplication by 2 is a chain self-map; it doubles every class
    two = ChainMap(s1, s1, {0: MatrixQ.identity(3).scaled(2),
                            1: MatrixQ.identity(3).scaled(2)})
    hm = induced_map(two)
    assert hm.rank(1) == 1
    assert hm.block(1).entry(0, 0) == Fraction(2)
    assert hm.block(0).entry(0, 0) == Fraction(2)
