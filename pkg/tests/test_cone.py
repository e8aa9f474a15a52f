import numpy as np
import pytest
from numpy.testing import assert_allclose

from knotopt import project, project_blocks

from helpers import brute_force_cone_projection, random_feasible_y


class TestAnchors:
    def test_feasible_input_unchanged(self):
        v = np.array([1.0, 2.0, 3.0])
        assert np.array_equal(project(v), v)

    def test_all_negative_projects_to_apex(self):
        assert_allclose(project(np.array([-1.0, -2.0])), [0.0, 0.0])

    def test_pooling(self):
        assert_allclose(project(np.array([2.0, 1.0, 3.0])), [1.5, 1.5, 3.0])

    def test_matches_brute_force_on_anchor(self):
        v = np.array([2.0, 1.0, 3.0])
        assert_allclose(project(v), brute_force_cone_projection(v), atol=1e-12)


class TestOracleEquivalence:
    def test_small_dimensions(self, rng):
        for n in range(1, 6):
            for _ in range(200):
                v = rng.uniform(-5.0, 5.0, size=n)
                assert_allclose(project(v), brute_force_cone_projection(v),
                                atol=1e-9)


class TestProperties:
    def test_feasibility_exact(self, rng):
        for _ in range(300):
            out = project(rng.normal(scale=3.0, size=rng.integers(1, 9)))
            assert out[0] >= 0.0
            assert np.all(np.diff(out) >= 0.0)

    def test_idempotent_exact(self, rng):
        for _ in range(100):
            out = project(rng.normal(scale=3.0, size=6))
            assert np.array_equal(project(out), out)

    def test_nonexpansive(self, rng):
        for _ in range(100):
            u = rng.normal(scale=4.0, size=7)
            v = rng.normal(scale=4.0, size=7)
            lhs = np.linalg.norm(project(u) - project(v))
            assert lhs <= np.linalg.norm(u - v) + 1e-12

    def test_obtuse_angle_optimality(self, rng):
        for _ in range(100):
            v = rng.normal(scale=3.0, size=6)
            p = project(v)
            w = random_feasible_y(rng, 6)
            assert float((v - p) @ (w - p)) <= 1e-9


class TestBlocks:
    def test_block_structure(self):
        result = project_blocks(np.array([3.0, 1.0, 2.0, -1.0, 5.0]))
        assert_allclose(result.output, [1.25, 1.25, 1.25, 1.25, 5.0])
        assert result.blocks == [(0, 4, 1.25), (4, 5, 5.0)]

    def test_blocks_cover_everything(self, rng):
        result = project_blocks(rng.normal(size=8))
        covered = [i for lo, hi, _ in result.blocks for i in range(lo, hi)]
        assert covered == list(range(8))
        for lo, hi, value in result.blocks:
            assert np.all(result.output[lo:hi] == value)


class TestValidation:
    def test_rejects_empty(self):
        with pytest.raises(ValueError):
            project(np.array([]))

    def test_rejects_non_finite(self):
        with pytest.raises(ValueError):
            project(np.array([1.0, np.nan]))
        with pytest.raises(ValueError):
            project(np.array([np.inf, 1.0]))
