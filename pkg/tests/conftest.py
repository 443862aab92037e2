import pytest

from prcodes import Code, Field, Poly, rs_code
from prcodes.decode import set_invariant_checking


@pytest.fixture(scope="session", autouse=True)
def _invariant_checks_on():
    # Engine loop-invariant assertions stay enabled for the whole suite;
    # any violation raises and fails the offending test.
    set_invariant_checking(True)
    yield


@pytest.fixture(scope="session")
def gf2():
    return Field(2)


@pytest.fixture(scope="session")
def gf5():
    return Field(5)


@pytest.fixture(scope="session")
def gf256():
    return Field(2, 8)


@pytest.fixture(scope="session")
def gf2_code(gf2):
    """The small GF(2) code used in the worked traces: moduli x, x+1, x^2+x+1, k=2."""
    moduli = [Poly.from_text(gf2, "0 1"),
              Poly.from_text(gf2, "1 1"),
              Poly.from_text(gf2, "1 1 1")]
    return Code(gf2, moduli, 2)


@pytest.fixture(scope="session")
def gf5_rs(gf5):
    """RS code over GF(5) with evaluation points 0..3 and k=2."""
    return rs_code(gf5, [0, 1, 2, 3], 2)


@pytest.fixture(scope="session")
def gf256_rs(gf256):
    """RS code over GF(256) with 10 points and k=4."""
    return rs_code(gf256, list(range(10)), 4)
