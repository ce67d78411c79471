import pytest

from zgring import (
    cyclic,
    dihedral,
    direct_product,
    elementary_abelian2,
    quaternion8,
    symmetric3,
)


def build_catalog():
    q8 = quaternion8()
    return {
        "C1": cyclic(1),
        "C2": cyclic(2),
        "C3": cyclic(3),
        "C4": cyclic(4),
        "C5": cyclic(5),
        "C6": cyclic(6),
        "C8": cyclic(8),
        "C2xC2": direct_product(cyclic(2), cyclic(2)),
        "S3": symmetric3(),
        "D4": dihedral(4),
        "D5": dihedral(5),
        "Q8": q8,
        "Q8xC2": direct_product(q8, cyclic(2)),
        "Q8xE2^2": direct_product(q8, elementary_abelian2(2)),
        "Q8xC3": direct_product(q8, cyclic(3)),
        "Q8xC5": direct_product(q8, cyclic(5)),
    }


@pytest.fixture(scope="session")
def catalog():
    return build_catalog()
