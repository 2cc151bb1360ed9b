from collections import defaultdict

import pytest

from trigrad.algebra import Bidegree
from trigrad.braid import build_marked_diagram, parse_braid
from trigrad.cube import braid_homology, build_cube, reduce_mode_check, resolve
from trigrad.homology import (
    InconclusiveComparison,
    graph_homology,
    link_homology,
    slice_homology_dim,
)


class TestResolve:
    def test_one_crossing_smoothing_is_two_circles(self):
        d = build_marked_diagram(parse_braid("1"))
        g = resolve(d, 0)
        assert g.wides == ()
        assert len(g.arcs) == 4
        assert g.external_signs() == ()

    def test_one_crossing_wide_is_theta(self):
        d = build_marked_diagram(parse_braid("1"))
        g = resolve(d, 1)
        assert len(g.wides) == 1
        assert len(g.arcs) == 2

    def test_trefoil_all_wide(self):
        d = build_marked_diagram(parse_braid("1 1 1"))
        g = resolve(d, 0b111)
        assert len(g.wides) == 3
        assert len(g.arcs) == 2

    def test_bad_mask(self):
        d = build_marked_diagram(parse_braid("1"))
        with pytest.raises(ValueError):
            resolve(d, 2)


class TestBuildCube:
    def test_unknot_single_vertex(self):
        cube = build_cube(parse_braid("", strands=1))
        assert list(cube.vertices) == [0]
        assert cube.edges == []
        h = link_homology(cube, 9)
        assert h.dims == {(0, -1, 1 + 2 * i): 1 for i in range(5)}

    def test_sigma_pair_cube_shape(self):
        cube = build_cube(parse_braid("1 -1"))
        assert len(cube.vertices) == 4
        assert len(cube.edges) == 4
        # positive crossing edges go 0 -> 1 on bit 0; negative go 1 -> 0 on bit 1
        dirs = {(e.src, e.tgt) for e in cube.edges}
        assert dirs == {(0, 1), (2, 3), (2, 0), (3, 1)}

    def test_edges_are_chain_maps_and_squares_anticommute(self):
        for text in ["1 1", "1 -1", "1 1 1"]:
            cube = build_cube(parse_braid(text))
            for e in cube.edges:
                e.cmap.verify_chain_map()
            out = defaultdict(list)
            for e in cube.edges:
                out[e.src].append(e)
            for e1 in cube.edges:
                for e2 in out[e1.tgt]:
                    for f1 in out[e1.src]:
                        if f1.crossing != e2.crossing:
                            continue
                        for f2 in out[f1.tgt]:
                            if f2.crossing != e1.crossing or f2.tgt != e2.tgt:
                                continue
                            a = e2.cmap.compose(e1.cmap)
                            b = f2.cmap.compose(f1.cmap)
                            for s in range(len(a.src.gens)):
                                row = {
                                    t: p * (e1.sign * e2.sign)
                                    for t, p in a.mat.get(s, {}).items()
                                }
                                for t, p in b.mat.get(s, {}).items():
                                    row[t] = row.get(t, p.ring.zero()) + p * (
                                        f1.sign * f2.sign
                                    )
                                assert all(p.is_zero() for p in row.values())

    def test_vertices_match_graph_homology(self):
        # the shared-exclusion pipeline gives the same homology as reducing
        # each resolution independently (cone shifts removed)
        b = parse_braid("1 1")
        cube = build_cube(b)
        for mask, cx in cube.vertices.items():
            lshift = sum(
                2
                for p, s in enumerate(b.letters)
                if s > 0 and not mask >> p & 1
            ) + sum(-2 for s in b.letters if s < 0)
            hg = graph_homology(resolve(cube.diagram, mask), 8)
            ks = sorted({g.bidegree.k for g in cx.gens})
            lmin = min(g.bidegree.l for g in cx.gens)
            dims = {}
            for k in ks:
                for l in range(lmin, 9 + lshift):
                    dval = slice_homology_dim(cx, k, l)
                    if dval and l - lshift <= 8:
                        dims[(0, k, l - lshift)] = dval
            assert dims == {
                key: v for key, v in hg.dims.items() if key[2] <= 8
            }, mask

    def test_deterministic_dump(self):
        a = build_cube(parse_braid("1 -2"))
        b = build_cube(parse_braid("1 -2"))
        assert a.dump() == b.dump()

    def test_open_braid_never_happens(self):
        # closures are always closed; the guard is on the shared potential
        cube = build_cube(parse_braid("2", strands=3))
        assert len(cube.vertices) == 2


class TestReduced:
    def test_reduced_unknot_one_class(self):
        h = braid_homology(parse_braid("", strands=1), 9, reduced=True)
        assert h.dims == {(0, -1, 1): 1}

    def test_reduce_mode_check_passes(self):
        assert reduce_mode_check(parse_braid("", strands=1), 10)
        assert reduce_mode_check(parse_braid("1 1"), 10)

    def test_trefoil_to_qmax_12(self):
        assert reduce_mode_check(parse_braid("1 1 1"), 12)

    def test_two_unlink_either_basepoint(self):
        b = parse_braid("", strands=2)
        assert reduce_mode_check(b, 10, basepoint="x1")
        assert reduce_mode_check(b, 10, basepoint="x2")

    def test_unknown_basepoint(self):
        with pytest.raises(ValueError):
            build_cube(parse_braid("1"), reduced=True, basepoint="zz")

    def test_cutoff_too_small_is_reported(self):
        with pytest.raises(InconclusiveComparison):
            reduce_mode_check(parse_braid("", strands=1), 2, margin=2)


class TestMarks:
    def test_mark_count_does_not_change_homology(self):
        b = parse_braid("1 -1")
        h1 = braid_homology(b, 8, marks_per_segment=1)
        h2 = braid_homology(b, 8, marks_per_segment=2)
        assert h1.dims == h2.dims


class TestKnownLinks:
    def test_cancelled_pair_matches_trivial_braid(self):
        # sigma sigma^{-1} closes to the two-component unlink
        from trigrad.homology import compare_up_to_shift

        pair = braid_homology(parse_braid("1 -1"), 10)
        unlink = braid_homology(parse_braid("", strands=2), 10)
        assert compare_up_to_shift(unlink, pair) == (0, 0, 0)

    def test_split_component_gets_its_circle(self):
        # closure of sigma_2 in B_3: unknot plus a split circle
        from trigrad.algebra import qt_expand
        from trigrad.homfly import homfly_F
        from trigrad.homology import euler_characteristic

        b = parse_braid("2", strands=3)
        h = braid_homology(b, 9)
        assert euler_characteristic(h) == qt_expand(homfly_F(b), 9)

    def test_connected_sum_of_trefoils(self):
        # the reduced homology of a connected sum is the graded tensor
        # product (normalized by the one-dimensional unknot class); with
        # both summands the trefoil, every slice is pinned
        tre = braid_homology(parse_braid("1 1 1"), 14, reduced=True).dims
        granny = braid_homology(
            parse_braid("1 1 1 2 2 2"), 14, reduced=True
        ).dims
        unknot_class = (0, -1, 1)
        expect = {}
        for (j1, k1, l1), d1 in tre.items():
            for (j2, k2, l2), d2 in tre.items():
                key = (
                    j1 + j2 - unknot_class[0],
                    k1 + k2 - unknot_class[1],
                    l1 + l2 - unknot_class[2],
                )
                expect[key] = expect.get(key, 0) + d1 * d2
        assert granny == expect
        assert sum(granny.values()) == 9
