from __future__ import annotations

import sys
from pathlib import Path

import pytest
from hypothesis import settings, strategies as st

sys.path.insert(0, str(Path(__file__).parent))

from freelat.catalog import running_implications, toy_poset  # noqa: E402
from freelat.implications import Implication, ImplicationFamily  # noqa: E402
from freelat.order import GroundSet, build_poset  # noqa: E402

settings.register_profile("default", deadline=None, max_examples=60)
settings.load_profile("default")

DATA = Path(__file__).resolve().parent.parent / "demos" / "data"


@st.composite
def posets(draw, max_size: int = 6, min_size: int = 1):
    """Random posets: covers only go from lower to higher index, so no cycles."""
    n = draw(st.integers(min_size, max_size))
    pairs = [(i, j) for i in range(n) for j in range(i + 1, n)]
    chosen = draw(st.lists(st.sampled_from(pairs), unique=True, max_size=len(pairs))) if pairs else []
    names = [f"p{i}" for i in range(n)]
    return build_poset(names, [(names[i], names[j]) for i, j in chosen]), chosen


@st.composite
def sigmas(draw, max_size: int = 7, max_imps: int = 6):
    n = draw(st.integers(1, max_size))
    full = (1 << n) - 1
    sub = st.integers(0, full)
    imps = draw(st.lists(st.tuples(sub, sub), max_size=max_imps))
    ground = GroundSet(tuple(f"x{i}" for i in range(n)))
    return ImplicationFamily(ground, tuple(Implication(a, b) for a, b in imps))


@pytest.fixture
def toy():
    return toy_poset()


@pytest.fixture
def sigma1():
    return running_implications()


def pytest_terminal_summary(terminalreporter):
    mod = sys.modules.get("test_acceptance")
    if mod is None or not getattr(mod, "RESULTS", None):
        return
    terminalreporter.section("acceptance criteria")
    for n in sorted(mod.RESULTS):
        terminalreporter.write_line(mod.RESULTS[n])
