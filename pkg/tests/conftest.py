import pytest

from loopspace.simplicial import (
    boundary_simplex,
    sphere_quotient,
    wedge_of_circles,
)


@pytest.fixture(scope="session")
def fixtures():
    """The five standard complexes, edge-inverted, keyed by short name."""
    return {
        "sphere2": sphere_quotient(2).z_extension(),
        "sphere3": sphere_quotient(3).z_extension(),
        "bd2": boundary_simplex(2).z_extension(),
        "bd3": boundary_simplex(3).z_extension(),
        "wedge2": wedge_of_circles(2).z_extension(),
    }
