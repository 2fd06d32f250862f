import os
import sys

import pytest

sys.path.insert(0, os.path.dirname(__file__))

from aomkit import fixtures  # noqa: E402
from aomkit.systems import SignSystem  # noqa: E402


@pytest.fixture
def lines_w():
    return fixtures.three_lines_system()


@pytest.fixture
def lines_broken(lines_w):
    return SignSystem(lines_w.ground, (v for v in lines_w if str(v) != "0+0"))


def systems_from(n, texts):
    return SignSystem.from_strings([chr(ord("a") + i) for i in range(n)], texts)
