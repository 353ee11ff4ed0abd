from fractions import Fraction

import pytest

from traversale import Conic, PLine, PPoint, canonical_chart
from traversale.synthetic import InscribedQuadrangle


@pytest.fixture
def circle():
    return Conic.unit_circle()


@pytest.fixture
def x_axis_chart():
    return canonical_chart(PLine(0, 1, 0))


@pytest.fixture
def worked_quadrangle(circle):
    """B=(1,0), C=(-1,0), D=(3/5,4/5), E=(5/13,12/13) on the unit circle."""
    return InscribedQuadrangle(
        circle,
        PPoint(1, 0, 1),
        PPoint(-1, 0, 1),
        PPoint(Fraction(3, 5), Fraction(4, 5), 1),
        PPoint(Fraction(5, 13), Fraction(12, 13), 1),
    )
