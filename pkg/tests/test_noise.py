import numpy as np
import pytest

from rabidiss import noise
from rabidiss.units import ghz, mhz


def test_white_classical_symmetric():
    s = noise.white(mhz(0.5), mode="classical")
    for w in (0.0, ghz(1.0), ghz(20.0)):
        assert s.eval(w) == mhz(0.5)
        assert s.eval(-w) == mhz(0.5)


def test_thermal_zero_temperature():
    s = noise.white(mhz(0.5), mode="thermal", kbt=0.0)
    assert s.eval(ghz(3.0)) == mhz(0.5)
    assert s.eval(-ghz(3.0)) == 0.0
    assert s.eval(0.0) == mhz(0.5)


def test_detailed_balance():
    kbt = ghz(2.0)
    spectra = [
        noise.white(mhz(1.0), mode="thermal", kbt=kbt),
        noise.ohmic(mhz(1.0), ghz(6.0), mode="thermal", kbt=kbt),
        noise.band_limited_white(mhz(1.0), ghz(50.0), mode="thermal", kbt=kbt),
    ]
    for s in spectra:
        for w in (ghz(0.3), ghz(1.0), ghz(6.0)):
            assert np.isclose(s.eval(-w), np.exp(-w / kbt) * s.eval(w))


def test_nbar():
    assert noise.nbar(ghz(1.0), 0.0) == 0.0
    kbt = ghz(1.0)
    assert np.isclose(noise.nbar(kbt, kbt), 1.0 / (np.e - 1.0))
    with pytest.raises(ValueError):
        noise.nbar(-ghz(1.0), kbt)


def test_ohmic_anchor():
    s = noise.ohmic(mhz(2.0), ghz(6.0), mode="classical")
    assert np.isclose(s.eval(ghz(6.0)), mhz(2.0))
    assert np.isclose(s.eval(ghz(3.0)), mhz(1.0))


def test_band_limited_cutoff():
    s = noise.band_limited_white(mhz(1.0), ghz(5.0), mode="classical")
    assert s.eval(ghz(4.9)) == mhz(1.0)
    assert s.eval(ghz(5.1)) == 0.0
    assert s.eval(-ghz(4.9)) == mhz(1.0)


def test_one_over_f():
    s = noise.one_over_f(mhz(1.0) * ghz(1.0), ghz(0.01), dc_rate=mhz(3.0))
    assert s.eval(0.0) == mhz(3.0)
    assert np.isclose(s.eval(ghz(2.0)), mhz(0.5))
    # infrared regularization
    assert np.isclose(s.eval(ghz(0.001)), s.eval(ghz(0.01)))


def test_tabulated_interpolation():
    omegas = [ghz(1.0), ghz(2.0), ghz(4.0)]
    rates = [mhz(1.0), mhz(2.0), mhz(4.0)]
    s = noise.tabulated(omegas, rates, mode="classical")
    assert np.isclose(s.eval(ghz(2.0)), mhz(2.0))
    # log-frequency linear interpolation: geometric midpoint
    mid = s.eval(np.sqrt(ghz(2.0) * ghz(4.0)))
    assert mhz(2.0) < mid < mhz(4.0)
    with pytest.raises(ValueError):
        s.eval(ghz(8.0))
    clamped = noise.tabulated(omegas, rates, out_of_range="clamp", mode="classical")
    assert clamped.eval(ghz(8.0)) == mhz(4.0)


def test_tabulated_from_csv(tmp_path):
    path = tmp_path / "spectrum.csv"
    path.write_text("# freq_ghz, rate_mhz\n1.0, 1.0\n2.0, 2.0\n4.0, 4.0\n")
    s = noise.tabulated_from_csv(path, mode="classical")
    assert np.isclose(s.eval(ghz(2.0)), mhz(2.0))


def test_invalid_inputs():
    with pytest.raises(ValueError):
        noise.white(-1.0)
    with pytest.raises(ValueError):
        noise.NoiseSpectrum("white", lambda w: 1.0, mode="quantum")
    with pytest.raises(ValueError):
        noise.tabulated([ghz(1.0)], [mhz(1.0)])
    with pytest.raises(ValueError):
        noise.tabulated([ghz(2.0), ghz(1.0)], [mhz(1.0), mhz(1.0)])
