import pathlib

import pytest
from hypothesis import strategies as st

from legfront.front import FrontEvent, L, R, X, orient, validate
from legfront.textio import parse_front, parse_grid

CORPUS = pathlib.Path(__file__).resolve().parent.parent / "corpus"

UNKNOT = [L(1), R(1)]
TREFOIL = [L(1), L(3), X(2), X(2), X(2), R(1), R(1)]


@pytest.fixture(scope="session")
def corpus_fronts():
    out = {}
    for path in sorted(CORPUS.glob("*.front")):
        out[path.stem] = parse_front(path.read_text())
    return out


@pytest.fixture(scope="session")
def corpus_grids():
    out = {}
    for path in sorted(CORPUS.glob("*.grid")):
        out[path.stem] = parse_grid(path.read_text())
    return out


@pytest.fixture
def unknot():
    return orient(validate(UNKNOT))


@pytest.fixture
def trefoil():
    return orient(validate(TREFOIL))


def random_word(draw, max_events=14):
    """Hypothesis helper: grow a valid word event by event, then close it."""
    events = []
    s = 0
    n = draw(st.integers(min_value=1, max_value=max_events))
    for _ in range(n):
        kinds = ["L"]
        if s >= 2:
            kinds += ["R", "X", "X"]  # bias toward crossings a little
        kind = draw(st.sampled_from(kinds))
        if kind == "L":
            i = draw(st.integers(min_value=1, max_value=s + 1))
            s += 2
        else:
            i = draw(st.integers(min_value=1, max_value=s - 1))
            if kind == "R":
                s -= 2
        events.append(FrontEvent(kind, i))
    while s > 0:
        i = draw(st.integers(min_value=1, max_value=s - 1))
        events.append(FrontEvent("R", i))
        s -= 2
    return events


@st.composite
def front_words(draw, max_events=14):
    return random_word(draw, max_events)


@st.composite
def front_diagrams(draw, max_events=14):
    return validate(random_word(draw, max_events))
