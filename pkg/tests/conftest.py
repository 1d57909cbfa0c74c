import pytest

from grassvar import (
    PrimeField,
    direct_sum,
    dual,
    quotient_by_linear_forms,
    regular_module,
    syzygy_step,
)

# Contexts keep every computation inside the library's resource caps: the
# (3,3) combination would need minors of a 27x27 matrix and Ext windows of
# length 58, both far past the documented limits.
CONTEXTS = [(2, 2), (3, 2), (2, 3)]


def unit(c, j):
    return tuple(1 if i == j else 0 for i in range(c))


def build_catalog(p, c):
    """Eight standard modules over k[x1..xc]/(xi^p)."""
    F = PrimeField(p)
    k = quotient_by_linear_forms(F, c, [unit(c, j) for j in range(c)])
    kE = regular_module(F, c)
    Rx1 = quotient_by_linear_forms(F, c, [unit(c, 0)])
    Rx2 = quotient_by_linear_forms(F, c, [unit(c, 1)])
    plus = tuple(1 if i < 2 else 0 for i in range(c))
    Rplus = quotient_by_linear_forms(F, c, [plus])
    return {
        "k": k,
        "kE": kE,
        "R/x1": Rx1,
        "R/x2": Rx2,
        "R/(x1+x2)": Rplus,
        "R/x1+R/x2": direct_sum(Rx1, Rx2),
        "Om(k)": syzygy_step(k)[1],
        "dual(R/x1)": dual(Rx1),
    }


@pytest.fixture(scope="session")
def catalog():
    return {(p, c): build_catalog(p, c) for p, c in CONTEXTS}


@pytest.fixture(scope="session")
def f2():
    return PrimeField(2)


@pytest.fixture(scope="session")
def f3():
    return PrimeField(3)
