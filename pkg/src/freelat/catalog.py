"""Small named inputs used throughout the docs, demos and tests."""

from __future__ import annotations

from .implications import ImplicationFamily
from .order import GroundSet, Poset, build_poset

TOY_ELEMENTS = ("a", "b", "c", "d", "e", "f", "g")
TOY_COVERS = (
    ("a", "b"), ("e", "b"), ("e", "f"), ("b", "c"),
    ("b", "g"), ("f", "g"), ("c", "d"), ("f", "d"),
)


def toy_poset() -> Poset:
    """The seven-element companion poset (a, e minimal; d, g maximal)."""
    return build_poset(TOY_ELEMENTS, TOY_COVERS)


def running_implications() -> ImplicationFamily:
    return ImplicationFamily.from_names(
        TOY_ELEMENTS,
        [
            ("b", "a e"),
            ("c", "b"),
            ("d", "c f"),
            ("f", "e"),
            ("g", "b f"),
            ("b f", "g"),
        ],
    )


# b >= a v e, c >= b, d >= c v f, f >= e, g = b v f
RUNNING_RELATIONS = (
    ("b", "a e"),
    ("c", "b"),
    ("d", "c f"),
    ("f", "e"),
    ("g", "b f"),
    ("b f", "g"),
)

FOUR_SETS_GROUND = GroundSet(tuple("abcdefghi"))
FOUR_SETS = {
    "A1": "a c d f",
    "A2": "b e f i",
    "A3": "a b c d e g i",
    "A4": "e g h",
}
