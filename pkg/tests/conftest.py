import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from gencayley import alpha_context, build_group, inversion_automorphism


@pytest.fixture(scope="session")
def z6():
    return build_group("cyclic:6")


@pytest.fixture(scope="session")
def z6_ctx(z6):
    alpha, _ = inversion_automorphism(z6)
    return alpha_context(z6, alpha)


@pytest.fixture(scope="session")
def z4():
    return build_group("cyclic:4")


@pytest.fixture(scope="session")
def z4_ctx(z4):
    alpha, _ = inversion_automorphism(z4)
    return alpha_context(z4, alpha)


@pytest.fixture(scope="session")
def v4():
    return build_group("V4")


@pytest.fixture(scope="session")
def v4_swap_ctx(v4):
    from gencayley import automorphism_from_perm

    # exchange the two generator coordinates: (x, y) -> (y, x)
    return alpha_context(v4, automorphism_from_perm(v4, (0, 2, 1, 3)))
