"""Coefficient artifact: parsing, hash, printed-form reproduction, stubs."""

import importlib.resources
import math

import numpy as np
import pytest

from fastgj import tables
from fastgj import _coeffs_stubs as stubs


@pytest.fixture(scope="module")
def table():
    return tables.default_table()


@pytest.fixture(scope="module")
def artifact_text():
    return (
        importlib.resources.files(tables.DATA_PACKAGE)
        .joinpath(tables.DATA_FILE)
        .read_text()
    )


class TestArtifact:
    def test_loads_and_hash(self, table, artifact_text):
        assert artifact_text.startswith("fastgj-tables 1\n")
        assert table.content_hash == artifact_text.split("\n")[1].split()[1]
        assert table.content_hash == stubs.ARTIFACT_HASH

    def test_tamper_detection(self, artifact_text):
        lines = artifact_text.split("\n")
        lines[10] = lines[10] + " "
        with pytest.raises(tables.TableFormatError):
            tables.parse_table("\n".join(lines))

    def test_orders_present(self, table):
        assert table.max_order("elem.u") >= 2
        assert table.max_order("elem.v") >= 2
        assert table.max_order("elem.th") >= 3
        assert table.max_order("bess.T") >= 3
        assert table.max_order("bess.th") >= 4
        assert table.max_order("sbess.th") >= 3

    def test_baseline_restriction(self):
        base = tables.baseline_table()
        assert base.max_order("elem.th") == 2
        assert base.max_order("elem.u") == 1
        assert base.max_order("bess.T") == 0
        assert base.max_order("bess.th") == -1   # theta1 lives in bess.T.0
        # series entries follow the same caps
        assert base.max_order("sbess.T") == 0


def _rand_angles(count, lo=0.35, hi=2.7, seed=3):
    rng = np.random.default_rng(seed)
    return rng.uniform(lo, hi, count)


class TestPrintedForms:
    """Sampled equality against the hand-transcribed closed displays."""

    def test_v1(self, table):
        a, b = 0.37, -0.21
        fn = table.bind(a, b).get("elem.v.0")
        th = _rand_angles(100)
        c, s = np.cos(th), np.sin(th)
        ref = (2 * a**2 - 2 * b**2 + (2 * a**2 + 2 * b**2 - 1) * c) / (8 * s)
        assert np.max(np.abs(fn(c, s) - ref)) < 2e-15 * np.max(np.abs(ref))

    def test_theta1(self, table):
        a, b = 1.4, 0.8
        fn = table.bind(a, b).get("elem.th.1")
        th = _rand_angles(100, seed=5)
        c, s = np.cos(th), np.sin(th)
        ref = -(2 * b**2 * c + 2 * a**2 * c - c - 2 * b**2 + 2 * a**2) / (8 * s)
        assert np.max(np.abs(fn(c, s) - ref)) < 2e-15 * np.max(np.abs(ref))

    def test_theta2(self, table):
        a, b = 0.15, -0.65
        fn = table.bind(a, b).get("elem.th.2")
        th = _rand_angles(100, seed=11)
        c, s = np.cos(th), np.sin(th)
        ref = (
            -33 * c - 36 * b**2 * c**2 + 36 * a**2 * c**2 + 24 * b**4 * c**2
            - 24 * a**4 * c**2 + 2 * c**3 + 84 * b**2 * c - 60 * a**4 * c
            - 60 * b**4 * c + 84 * a**2 * c + 4 * b**4 * c**3 + 4 * a**4 * c**3
            - 8 * b**2 * c**3 + 40 * a**2 - 8 * a**2 * c**3 - 40 * b**2
            + 32 * b**4 - 32 * a**4 + 24 * a**2 * b**2 * c**3
            - 24 * a**2 * b**2 * c
        ) / (384 * s**3)
        assert np.max(np.abs(fn(c, s) - ref)) < 4e-15 * np.max(np.abs(ref))

    def test_A1(self, table):
        a, b = 2.3, -0.55
        fn = table.bind(a, b).get("bess.T.0")
        th = _rand_angles(100, seed=17)
        s, c = np.sin(th), np.cos(th)
        ref = ((4 * a**2 - 1) * (s - th * c)
               + 2 * th * (a**2 - b**2) * (c - 1)) / (8 * th * s)
        assert np.max(np.abs(fn(th, s, c) - ref)) < 4e-15 * np.max(np.abs(ref))

    def test_Z0(self, table):
        a, b = 0.9, 1.7
        bound = table.bind(a, b)
        z0 = bound.get("bess.Z.0")
        a1 = bound.get("bess.T.0")
        th = _rand_angles(60, seed=23)
        s, c = np.sin(th), np.cos(th)
        ref = (2 * a + 1) + 2 * th * a1(th, s, c)
        assert np.max(np.abs(z0(th, s, c) - ref)) < 2e-15 * np.max(np.abs(ref))


class TestStubs:
    """The generated scalar evaluators decode to the same functions."""

    @pytest.mark.parametrize("name", [
        "elem.u.1", "elem.v.1", "elem.M.1", "elem.N.0", "elem.th.2",
        "elem.th.3",
    ])
    def test_elementary(self, table, name):
        a, b = 0.62, -0.48
        fn = table.bind(a, b).get(name)
        stub = getattr(stubs, name.replace(".", "_"))
        for th in _rand_angles(25, seed=29):
            c, s = math.cos(th), math.sin(th)
            assert stub(c, s, a, b) == pytest.approx(
                float(fn(np.float64(c), np.float64(s))), rel=2e-13)

    @pytest.mark.parametrize("name", [
        "bess.S.1", "bess.T.1", "bess.Y.1", "bess.Z.1", "bess.th.2",
        "bess.th.3",
    ])
    def test_bessel_closed(self, table, name):
        a, b = 1.15, 0.34
        fn = table.bind(a, b).get(name)
        stub = getattr(stubs, name.replace(".", "_"))
        for th in _rand_angles(25, seed=31):
            s, c = math.sin(th), math.cos(th)
            assert stub(th, s, c, a, b) == pytest.approx(
                float(fn(np.float64(th), np.float64(s), np.float64(c))),
                rel=2e-12)

    @pytest.mark.parametrize("name", [
        "sbess.T.0", "sbess.S.1", "sbess.Z.0", "sbess.th.2",
    ])
    def test_series(self, table, name):
        a, b = -0.33, 0.51
        fn = table.bind(a, b).get(name)
        stub = getattr(stubs, name.replace(".", "_"))
        for th in np.linspace(0.02, 0.3, 12):
            assert stub(float(th), a, b) == pytest.approx(
                float(fn(np.float64(th))), rel=1e-12)