import doctest

import bredim.lattice


def test_lattice_doctests():
    results = doctest.testmod(bredim.lattice)
    assert results.attempted >= 4
    assert results.failed == 0
