import sys
from pathlib import Path

import pytest

sys.path.insert(0, str(Path(__file__).parent))

from finring import build_expr, default_corpus

# everything here has order <= 16 so the naive oracle stays fast
SMALL_RINGS = (
    "Z(2)", "Z(3)", "Z(4)", "Z(6)", "Z(8)",
    "U(2,Z(2))", "M(2,Z(2))", "D(3,Z(2))", "V(3,Z(2))",
    "H(Z(2),1,1)", "K(Z(2),0)", "dorroh(Z(2),sub[])",
    "prod(Z(2),Z(3))", "twist(Z(2),hom[#0,#1])",
)


@pytest.fixture(scope="session")
def rings():
    """Small rings shared across modules, built once per session."""
    return {text: build_expr(text) for text in SMALL_RINGS}


@pytest.fixture(scope="session")
def corpus():
    return default_corpus()
