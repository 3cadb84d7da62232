from fractions import Fraction
from itertools import combinations

import pytest

from mslab import _pykernels

try:
    from mslab import _ckernels
except ImportError:
    _ckernels = None

KERNELS = [pytest.param(_pykernels, id="python")]
if _ckernels is not None:
    KERNELS.append(pytest.param(_ckernels, id="cython"))


@pytest.fixture(params=KERNELS)
def kernel(request):
    return request.param


def brute_phi(values, d):
    """Independent oracle: exact Fraction sums over every d-subset."""
    values = [Fraction(v) for v in values]
    return sum(1 for c in combinations(values, d) if sum(c, Fraction(0)) >= 0)
