import pytest

from toric_rouquier.fan import Fan, cox_data


def make_a1():
    return Fan.from_data(1, [(1,)], [(0,)])


def make_p1():
    return Fan.from_data(1, [(1,), (-1,)], [(0,), (1,)])


def make_p2():
    return Fan.from_data(2, [(1, 0), (0, 1), (-1, -1)],
                         [(0, 1), (0, 2), (1, 2)])


def make_p1xp1():
    return Fan.from_data(2, [(1, 0), (-1, 0), (0, 1), (0, -1)],
                         [(0, 2), (0, 3), (1, 2), (1, 3)])


def make_hirzebruch1():
    return Fan.from_data(2, [(1, 0), (0, 1), (-1, 1), (0, -1)],
                         [(0, 1), (1, 2), (2, 3), (3, 0)])


def make_p112():
    # weighted projective plane P(1,1,2): singular cone at (0,1),(-1,-2)
    return Fan.from_data(2, [(1, 0), (0, 1), (-1, -2)],
                         [(0, 1), (0, 2), (1, 2)])


def make_singular_cone():
    # a single singular 2-cone (index 2), used for skeleton inclusion
    return Fan.from_data(2, [(0, 1), (2, -1)], [(0, 1)])


def make_stellar_refinement():
    # stellar subdivision of the singular cone above along (1, 0)
    return Fan.from_data(2, [(0, 1), (2, -1), (1, 0)], [(0, 2), (1, 2)])


CORPUS = {
    "A1": make_a1,
    "P1": make_p1,
    "P2": make_p2,
    "P1xP1": make_p1xp1,
    "F1": make_hirzebruch1,
    "P112": make_p112,
}


@pytest.fixture
def a1():
    return make_a1()


@pytest.fixture
def p1():
    return make_p1()


@pytest.fixture
def p2():
    return make_p2()


@pytest.fixture
def p1xp1():
    return make_p1xp1()


@pytest.fixture
def hirzebruch1():
    return make_hirzebruch1()


@pytest.fixture
def p112():
    return make_p112()


@pytest.fixture
def p2_cox(p2):
    return cox_data(p2)
