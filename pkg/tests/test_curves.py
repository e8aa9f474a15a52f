import math

import numpy as np
import pytest
from numpy.testing import assert_allclose

from knotopt import (Curve, CurveCatalogEntry, CurveDomainError, CurveFamily,
                     load_catalog)

from helpers import central_diff, simpson_integral


class TestValues:
    def test_logistic_midpoint(self, catalog_by_name):
        assert catalog_by_name["logistic1a"].curve.value(0.0) == pytest.approx(0.5)

    def test_gompertz_at_zero(self, catalog_by_name):
        value = catalog_by_name["gompertz1a"].curve.value(0.0)
        assert value == pytest.approx(math.exp(-1.0), rel=1e-12)

    def test_arctan_at_zero(self, catalog_by_name):
        assert catalog_by_name["arctan1b"].curve.value(0.0) == 0.0

    def test_vectorised_matches_scalar(self, catalog):
        for entry in catalog:
            xs = np.linspace(entry.a, entry.b, 7)
            batch = entry.curve.value(xs)
            singles = [entry.curve.value(x) for x in xs]
            assert_allclose(batch, singles, rtol=0, atol=0)


class TestDerivatives:
    def test_logistic_first_derivative_peak(self, catalog_by_name):
        assert catalog_by_name["logistic1a"].curve.deriv1(0.0) == pytest.approx(0.25)

    def test_logistic_inflection(self, catalog_by_name):
        assert catalog_by_name["logistic1a"].curve.deriv2(0.0) == pytest.approx(0.0, abs=1e-15)

    def test_weibull_first_derivative_fd(self, catalog_by_name):
        curve = catalog_by_name["weibull1a"].curve
        fd = central_diff(curve.value, -1.0, 1e-6)
        assert_allclose(curve.deriv1(-1.0), fd, rtol=1e-8)

    def test_first_derivative_matches_fd_on_catalog(self, catalog):
        for entry in catalog:
            h = 1e-6 * (entry.b - entry.a)
            xs = np.linspace(entry.a, entry.b, 102)[1:-1]
            fd = (entry.curve.value(xs + h) - entry.curve.value(xs - h)) / (2 * h)
            assert_allclose(entry.curve.deriv1(xs), fd, rtol=1e-6, atol=1e-9,
                            err_msg=f"deriv1 mismatch for {entry.name}")

    def test_second_derivative_matches_fd_on_catalog(self, catalog):
        for entry in catalog:
            h = 1e-6 * (entry.b - entry.a)
            xs = np.linspace(entry.a, entry.b, 102)[1:-1]
            fd = (entry.curve.deriv1(xs + h) - entry.curve.deriv1(xs - h)) / (2 * h)
            assert_allclose(entry.curve.deriv2(xs), fd, rtol=1e-6, atol=1e-9,
                            err_msg=f"deriv2 mismatch for {entry.name}")


class TestIntegration:
    def test_empty_interval(self, catalog):
        for entry in catalog:
            assert entry.curve.integrate(1.3, 1.3) == 0.0

    def test_logistic_closed_form(self, catalog_by_name):
        value = catalog_by_name["logistic1a"].curve.integrate(0.0, 2.0)
        assert_allclose(value, math.log((1.0 + math.e ** 2) / 2.0), rtol=1e-13)

    def test_gompertz_against_simpson(self, catalog_by_name):
        curve = catalog_by_name["gompertz1a"].curve
        oracle = simpson_integral(curve.value, 0.0, 6.0, tol=1e-13)
        assert_allclose(curve.integrate(0.0, 6.0), oracle, atol=1e-10)

    def test_additivity(self, catalog, rng):
        for entry in catalog:
            whole = entry.curve.integrate(entry.a, entry.b)
            for _ in range(3):
                mid = rng.uniform(entry.a, entry.b)
                split = entry.curve.integrate(entry.a, mid) \
                    + entry.curve.integrate(mid, entry.b)
                assert abs(whole - split) < 1e-11

    def test_reversed_bounds_rejected(self, catalog_by_name):
        with pytest.raises(ValueError):
            catalog_by_name["logistic1a"].curve.integrate(2.0, 0.0)


class TestShape:
    # weibull1a has an inflection at -1/sqrt(2), inside its catalog interval,
    # so its concave flag only describes the bulk of the interval
    CONCAVE_EVERYWHERE = ["logistic1a", "logistic2a", "logistic3a",
                          "gompertz1a", "weibull2a", "weibull3a"]

    def test_flagged_rows_are_concave_inside(self, catalog_by_name):
        for name in self.CONCAVE_EVERYWHERE:
            entry = catalog_by_name[name]
            xs = np.linspace(entry.a, entry.b, 102)[1:-1]
            assert np.all(entry.curve.deriv2(xs) < 0.0), name

    def test_weibull1a_inflection(self, catalog_by_name):
        entry = catalog_by_name["weibull1a"]
        flip = -1.0 / math.sqrt(2.0)
        assert entry.a < flip < entry.b
        left = np.linspace(entry.a, flip, 40)[1:-1]
        right = np.linspace(flip, entry.b, 40)[1:-1]
        assert np.all(entry.curve.deriv2(left) < 0.0)
        assert np.all(entry.curve.deriv2(right) > 0.0)


class TestValidation:
    def test_arctan_rejects_shape(self):
        with pytest.raises(ValueError):
            Curve(CurveFamily.ARCTAN, 0.0, 1.0, 1.0, 1.0, 0.0)

    def test_other_families_require_shape(self):
        with pytest.raises(ValueError):
            Curve(CurveFamily.WEIBULL, 0.0, 1.0, None, 1.0, 0.0)

    def test_fractional_power_domain_error(self, catalog_by_name):
        curve = catalog_by_name["weibull3a"].curve  # (x)**2.2 needs x >= 0
        with pytest.raises(CurveDomainError):
            curve.value(-1.0)

    def test_algebraic_domain_error(self):
        curve = Curve(CurveFamily.ALGEBRAIC, 0.0, 1.0, 2.0, 1.0, -2.0)
        with pytest.raises(CurveDomainError):
            curve.value(1.0)  # x**2 - 2 < 0 under a square root


class TestCatalog:
    def test_bundled_catalog(self, catalog):
        assert len(catalog) == 20
        names = [entry.name for entry in catalog]
        assert len(set(names)) == 20
        assert all(entry.a < entry.b for entry in catalog)
        assert sum(entry.concave for entry in catalog) == 7

    def test_arctan_rows_have_no_shape(self, catalog):
        for entry in catalog:
            if entry.curve.family is CurveFamily.ARCTAN:
                assert entry.curve.s is None

    def test_load_custom_file(self, tmp_path):
        path = tmp_path / "mini.csv"
        path.write_text(
            "name,type,v1,v2,s,d1,d2,concave,a,b\n"
            "demo,Arctan,0.0,1.0,-,1.0,0.0,N,-1.0,1.0\n")
        entries = load_catalog(path)
        assert len(entries) == 1
        assert entries[0].curve.family is CurveFamily.ARCTAN

    def test_duplicate_names_rejected(self, tmp_path):
        path = tmp_path / "dup.csv"
        path.write_text(
            "name,type,v1,v2,s,d1,d2,concave,a,b\n"
            "demo,Arctan,0.0,1.0,-,1.0,0.0,N,-1.0,1.0\n"
            "demo,Arctan,0.0,2.0,-,1.0,0.0,N,-1.0,1.0\n")
        with pytest.raises(ValueError):
            load_catalog(path)

    def test_interval_validated(self):
        curve = Curve(CurveFamily.ARCTAN, 0.0, 1.0, None, 1.0, 0.0)
        with pytest.raises(ValueError):
            CurveCatalogEntry(name="bad", curve=curve, concave=False, a=1.0, b=1.0)
