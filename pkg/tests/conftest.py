"""
Shared pytest fixtures
"""

import sys
from pathlib import Path

import numpy as np
import pytest

# Add parent directory to path
sys.path.insert(0, str(Path(__file__).resolve().parent.parent))

from dihedral_kring.exactalg import IntPoly  # noqa: E402


@pytest.fixture
def rng():
    return np.random.default_rng(20120509)


@pytest.fixture
def w():
    return IntPoly.variable()
