import random

import pytest

from loopspace.fileformat import parse_word
from loopspace.paths import (
    PathCell,
    PathError,
    act,
    cover_graph,
    covering_report,
    path_cell,
    path_degeneracy,
    path_degeneracy_slots,
    path_face,
    to_adjacency,
    to_dot,
)
from loopspace.words import canonical, random_reduced_word, unit


class TestCells:
    def test_degree_and_canonical_base(self, fixtures):
        zx = fixtures["bd2"]
        c = path_cell(zx, zx.term("01"))
        assert c.degree == 1 and c.tail == unit("1")

    def test_top_degeneracy_moves_to_tail(self, fixtures):
        zx = fixtures["bd2"]
        t = zx.degenerate(zx.term("01"), 1)  # s1.01
        c = path_cell(zx, t)
        assert c.base == zx.term("01")
        assert c.tail.degree == 1  # one unit-degeneracy absorbed into the tail

    def test_tail_endpoint_checked(self, fixtures):
        zx = fixtures["bd2"]
        with pytest.raises(PathError):
            path_cell(zx, zx.term("01"), unit("0"))


class TestFaces:
    def test_edge_faces(self, fixtures):
        zx = fixtures["bd2"]
        c = path_cell(zx, zx.term("01"))
        src = path_face(zx, c, 1, 0)
        tgt = path_face(zx, c, 1, 1)
        assert tgt == PathCell(zx.term("1"), unit("1"))
        assert src.base == zx.term("0")
        assert [t.generator.name for t in src.tail.letters] == ["01"]

    def test_face_face_interchange(self, fixtures):
        rng = random.Random(11)
        for key in ("bd3", "sphere3", "wedge2"):
            zx = fixtures[key]
            gens = [g for g in zx.generators.values() if g.dim >= 1]
            for _ in range(40):
                g = gens[rng.randrange(len(gens))]
                t = zx.term(g.name)
                for _ in range(rng.randrange(2)):
                    t = zx.degenerate(t, rng.randrange(t.dim + 1))
                tail = random_reduced_word(
                    zx, rng, zx.endpoints(t)[1], zx.basepoint, 0, 2)
                c = path_cell(zx, t, tail)
                n = c.degree
                for j in range(1, n + 1):
                    for i in range(1, j):
                        for eps in (0, 1):
                            for om in (0, 1):
                                assert (
                                    path_face(zx, path_face(zx, c, j, om), i, eps)
                                    == path_face(zx, path_face(zx, c, i, eps), j - 1, om)
                                ), (c, i, j, eps, om)

    def test_degeneracy_raises_degree(self, fixtures):
        zx = fixtures["bd3"]
        c = path_cell(zx, zx.term("012"),
                      canonical(zx, (zx.term("23"), zx.term("03^op")), "2"))
        for j in range(1, path_degeneracy_slots(c) + 1):
            assert path_degeneracy(zx, c, j).degree == c.degree + 1


class TestAction:
    def test_act_composes_tail(self, fixtures):
        zx = fixtures["bd2"]
        c = path_cell(zx, zx.term("01"),
                      canonical(zx, (zx.term("12"), zx.term("02^op")), "1"))
        w = parse_word(zx, "02;12^op;01^op")
        moved = act(zx, c, w)
        assert moved.base == c.base
        # (12)(02^op) . (02)(12^op)(01^op) cancels down to (01^op)
        assert [t.generator.name for t in moved.tail.letters] == ["01^op"]


class TestCovering:
    def test_wedge_cover_is_tree(self, fixtures):
        zx = fixtures["wedge2"]
        g = cover_graph(zx, max_length=5)
        report = covering_report(zx, g)
        assert report["vertices"] == 485  # 1 + sum 4*3^(k-1), k<=5
        assert report["edges"] == 484
        assert report["tree"] and report["connected"] and report["ok"]

    def test_triangle_cover_is_line(self, fixtures):
        zx = fixtures["bd2"]
        g = cover_graph(zx, max_length=3)
        report = covering_report(zx, g)
        # the 1-skeleton of the triangle unwinds to a line: 3 vertices per
        # turn of the hexagon, words of length <= 3 over 3 base vertices
        assert report["connected"] and report["ok"]
        degrees = {}
        for cell, src, tgt in g.edges:
            degrees[src] = degrees.get(src, 0) + 1
            degrees[tgt] = degrees.get(tgt, 0) + 1
        interior = [v for v, d in degrees.items() if d == 2]
        assert len(interior) >= report["vertices"] - 2

    def test_triangle_fiber_words(self, fixtures):
        zx = fixtures["bd2"]
        g = cover_graph(zx, max_length=3)
        fiber = sorted(
            str(v.tail) for v in g.vertices if v.base.generator.name == "0")
        expected = sorted(
            str(parse_word(zx, s)) for s in ("e", "01;12;02^op", "02;12^op;01^op"))
        assert fiber == expected

    def test_exports(self, fixtures):
        zx = fixtures["bd2"]
        g = cover_graph(zx, max_length=2)
        dot = to_dot(g)
        assert dot.startswith("digraph") and dot.endswith("}")
        adj = to_adjacency(g)
        assert len(adj) == g.vertex_count
        assert sum(len(v) for v in adj.values()) == g.edge_count
