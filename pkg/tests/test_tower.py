import pytest

from qmut import (
    Direction,
    Quiver,
    Tower,
    TriangularDecomposition,
    build_scheme,
    decompose_triangular,
    make_family,
    mutate_tower,
    quivers_equal,
    restrict,
    verify_scheme,
    verify_tower,
)
from qmut.errors import (
    DepthExceeded,
    NotTriangularAt,
    NoSeedFoundUpTo,
    SeedNotReddeningAt,
    VertexNotFound,
)
from qmut.tower import ReddeningScheme, restrict_sequence

from conftest import random_quiver


def random_tower(rng, depth=5, size_max=7):
    """Nested restrictions of one random top quiver: invariants by
    construction."""
    top = random_quiver(rng, n_max=size_max)
    verts = list(top.mutable)
    rng.shuffle(verts)
    cuts = sorted(rng.randint(1, len(verts)) for _ in range(depth - 1))
    levels = [restrict(top, verts[:c]) for c in cuts] + [top]
    return Tower.from_levels(levels)


class TestVerifyTower:
    def test_figure3_tower_ok(self):
        assert verify_tower(make_family("path_one_sided"), 6).ok

    def test_figure4_relabeled_tower_ok(self):
        assert verify_tower(make_family("path_bi_source"), 5).ok

    def test_dropped_arrow_reported(self):
        q2 = Quiver(["1", "2"], [], {("1", "2"): 1})
        q3_bad = Quiver(["1", "2", "3"], [], {("2", "3"): 1})
        report = verify_tower(Tower.from_levels([restrict(q2, ["1"]), q2, q3_bad]), 3)
        assert not report.ok
        assert report.failed_level == 2

    def test_depth_exceeded(self):
        t = Tower.from_levels([Quiver(["1"], [], {})])
        with pytest.raises(DepthExceeded):
            verify_tower(t, 2)

    def test_random_towers_ok(self, rng):
        for _ in range(25):
            assert verify_tower(random_tower(rng), 5).ok


class TestMutateTower:
    def test_figure5_level5(self):
        mt = mutate_tower(make_family("path_one_sided"), "3", scan_depth=10)
        assert mt.level(5).arrows() == [
            ("1", "2", 1),
            ("2", "4", 1),
            ("3", "2", 1),
            ("4", "3", 1),
            ("4", "5", 1),
        ]

    def test_figure5_level1(self):
        mt = mutate_tower(make_family("path_one_sided"), "3", scan_depth=10)
        assert quivers_equal(mt.level(1), Quiver(["1"], [], {}))

    def test_involution_levelwise(self, rng):
        t = random_tower(rng)
        k = rng.choice(t.level(2).mutable)
        twice = mutate_tower(mutate_tower(t, k), k)
        for i in range(1, 6):
            assert quivers_equal(twice.level(i), t.level(i))

    def test_result_is_tower(self, rng):
        for _ in range(20):
            t = random_tower(rng)
            for k in t.level(3).mutable:
                assert verify_tower(mutate_tower(t, k), 5).ok

    def test_restriction_coherence(self, rng):
        # the proof obligation: mutated level i is the induced subquiver
        # of mutated level i+1 on the level-i vertex set
        t = random_tower(rng)
        k = rng.choice(t.level(1).mutable)
        mt = mutate_tower(t, k)
        for i in range(1, 5):
            assert quivers_equal(
                mt.level(i), restrict(mt.level(i + 1), t.level(i).vertices)
            )

    def test_unknown_vertex(self):
        t = Tower.from_levels([Quiver(["1"], [], {})])
        with pytest.raises(VertexNotFound):
            mutate_tower(t, "9")


class TestVerifyScheme:
    def test_figure6_scheme(self):
        t = make_family("path_bi_source")
        s = ReddeningScheme(lambda i: [str(v) for v in range(-(i - 1), i)])
        assert verify_scheme(t, s, 4).ok

    def test_figure7_scheme_explicit_levels(self):
        t = make_family("path_bi_center_out")
        s = ReddeningScheme.from_levels([["0"], ["0", "-1", "1"], ["0", "-1", "1", "-2", "2"]])
        assert verify_scheme(t, s, 3).ok

    def test_figure7_wrong_level2_order(self):
        # (-1,0,1) restricts to (0) so compatibility holds; the level-2
        # reddening check decides the verdict, and here it fails: vertex
        # -1 ends green when 0 is mutated between the outer vertices
        t = make_family("path_bi_center_out")
        s = ReddeningScheme.from_levels([["0"], ["-1", "0", "1"]])
        report = verify_scheme(t, s, 2)
        assert not report.ok
        assert report.kind == "not_reddening"
        assert report.failed_level == 2

    def test_compatibility_failure_detected(self):
        t = make_family("path_bi_source")
        s = ReddeningScheme.from_levels([["0"], ["-1", "1", "0", "0"]])
        report = verify_scheme(t, s, 2)
        assert not report.ok
        assert report.kind == "compatibility"
        assert report.failed_level == 1

    def test_not_reddening_detected(self):
        t = make_family("path_one_sided")
        s = ReddeningScheme.from_levels([["1"], ["1", "2", "2"]])
        report = verify_scheme(t, s, 2)
        assert not report.ok
        assert report.kind == "not_reddening"
        assert report.failed_level == 2

    def test_compatibility_is_transitive(self):
        t = make_family("star", {"rays": 3})
        from qmut import known_scheme

        s = known_scheme("star", {"rays": 3})
        s2 = restrict_sequence(s.level(4), t.level(2).vertices)
        assert s2 == s.level(2)


class TestBuildScheme:
    def test_figure8_star_prefix(self):
        t = make_family("star", {"rays": 3})
        d = TriangularDecomposition(
            sigma1=["0"],
            taus={i: [f"{i - 1}a", f"{i - 1}b", f"{i - 1}c"] for i in (2, 3, 4)},
            directions={i: Direction.OUT for i in (2, 3, 4)},
        )
        s = build_scheme(t, d, 4)
        assert s.level(2) == ["0", "1a", "1b", "1c"]
        assert verify_scheme(t, s, 4).ok

    def test_depth_one(self):
        t = make_family("path_one_sided")
        d = TriangularDecomposition(sigma1=["1"])
        s = build_scheme(t, d, 1)
        assert s.level(1) == ["1"]

    def test_bad_seed_rejected(self):
        t = make_family("path_one_sided")
        d = TriangularDecomposition(sigma1=["1", "1"])
        with pytest.raises(SeedNotReddeningAt):
            build_scheme(t, d, 1)

    def test_nested_triangles_directions(self):
        t = make_family("nested_triangles")
        d = decompose_triangular(t, 4, 6)
        assert [d.directions[i] for i in (2, 3, 4)] == [
            Direction.OUT,
            Direction.IN,
            Direction.OUT,
        ]
        s = build_scheme(t, d, 4)
        assert verify_scheme(t, s, 4).ok

    def test_json_round_trip(self):
        t = make_family("nested_triangles")
        d = decompose_triangular(t, 3, 6)
        doc = d.to_json()
        d2 = TriangularDecomposition.from_json(doc)
        assert d2.sigma1 == d.sigma1
        assert d2.taus == d.taus
        assert {i: Direction(v) for i, v in d2.directions.items()} == d.directions


class TestDecompose:
    def test_star_all_out(self):
        d = decompose_triangular(make_family("star", {"rays": 3}), 3, 4)
        assert all(dirn is Direction.OUT for dirn in d.directions.values())

    def test_path_one_sided_single_vertex_layers(self):
        d = decompose_triangular(make_family("path_one_sided"), 4, 4)
        assert d.taus == {2: ["2"], 3: ["3"], 4: ["4"]}
        assert all(dirn is Direction.OUT for dirn in d.directions.values())

    def test_not_triangular_reported(self):
        q1 = Quiver(["1"], [], {})
        q2 = Quiver(["1", "2", "3"], [], {("1", "2"): 1, ("3", "1"): 1})
        t = Tower.from_levels([q1, q2])
        with pytest.raises(NotTriangularAt) as e:
            decompose_triangular(t, 2, 4)
        assert e.value.level == 2

    def test_no_seed_reported_as_bounded(self):
        markov = Quiver(
            ["1", "2", "3"], [], {("1", "2"): 2, ("2", "3"): 2, ("3", "1"): 2}
        )
        t = Tower.from_levels([markov])
        with pytest.raises(NoSeedFoundUpTo) as e:
            decompose_triangular(t, 1, 4)
        assert e.value.max_len == 4

    def test_build_after_decompose_verifies(self, rng):
        for name, params in [("path_one_sided", None), ("star", {"rays": 2})]:
            t = make_family(name, params)
            d = decompose_triangular(t, 4, 6)
            s = build_scheme(t, d, 4)
            assert verify_scheme(t, s, 4).ok
