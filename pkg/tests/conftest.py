import time

import pytest

from paragcd.baseline_recursive import pgcd_recursive
from paragcd.polyring import ParamId, ParamPoly


@pytest.fixture(scope="session")
def recursive_344():
    """The (3,4,4) baseline table is slow; build it once and keep the time."""
    t0 = time.perf_counter()
    table = pgcd_recursive((3, 4, 4))
    return table, time.perf_counter() - t0


def a(i, j, e=1):
    return ParamPoly.param(i, j, e)


def const(c):
    return ParamPoly.constant(c)


def pid(i, j):
    return ParamId(i, j)
