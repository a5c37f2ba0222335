import pytest
from hypothesis import given

from conftest import posets
from freelat.errors import CapExceeded, CycleError, ParseError, UnknownElement
from freelat.order import (
    GroundSet,
    SubsetFamily,
    antichain,
    build_poset,
    chain,
    dual,
    enumerate_filters,
    enumerate_ideals,
    format_poset,
    is_filter,
    is_ideal,
    parse_poset,
    submasks,
)
from freelat.distbool import filter_name
import oracles


def test_ground_set_rejects_duplicates():
    with pytest.raises(ValueError):
        GroundSet(("a", "a"))


def test_ground_mask_round_trip():
    g = GroundSet(tuple("abc"))
    assert g.mask("a c") == 0b101
    assert g.names_of(0b101) == ("a", "c")
    assert g.format(0b101) == "{a,c}"


def test_submasks_cover_all_subsets():
    assert sorted(submasks(0b1011)) == sorted(m for m in range(16) if m & ~0b1011 == 0)


def test_toy_covers_round_trip(toy):
    got = {(toy.names[x], toy.names[y]) for x, y in toy.covers()}
    assert got == {("a", "b"), ("e", "b"), ("e", "f"), ("b", "c"), ("b", "g"), ("f", "g"), ("c", "d"), ("f", "d")}


def test_transitivity_in_toy(toy):
    assert toy.leq("a", "d") and toy.leq("e", "g") and not toy.leq("a", "f")


def test_singleton_and_cycle():
    assert len(build_poset(["x"], [])) == 1
    with pytest.raises(CycleError):
        build_poset(["x", "y"], [("x", "y"), ("y", "x")])


def test_element_cap():
    with pytest.raises(CapExceeded):
        build_poset([f"x{i}" for i in range(5)], [], max_elements=4)


def test_toy_ideals_and_filters(toy):
    assert len(enumerate_ideals(toy)) == 14
    filters = enumerate_filters(toy)
    names = {filter_name(toy, f) for f in filters}
    assert names == {
        "∅", "a↑", "b↑", "c↑", "d↑", "e↑", "f↑", "g↑",
        "a,e↑", "a,f↑", "b,f↑", "c,f↑", "c,g↑", "d,g↑",
    }


@pytest.mark.parametrize("n", [1, 2, 5])
def test_chain_and_antichain_counts(n):
    assert len(enumerate_ideals(chain(n))) == n + 1
    assert len(enumerate_filters(antichain(n))) == 2**n


def test_dual_swaps_ideals_and_filters(toy):
    assert enumerate_filters(dual(toy)).members == enumerate_ideals(toy).members


def test_is_ideal_examples(toy):
    assert is_ideal(toy, "a e")
    assert not is_ideal(toy, "b")
    assert is_ideal(toy, 0) and is_filter(toy, 0)


def test_enumeration_cap(toy):
    with pytest.raises(CapExceeded):
        enumerate_ideals(toy, cap=5)


@given(posets(max_size=7))
def test_ideals_match_brute_force(pc):
    p, covers = pc
    leq = oracles.transitive_leq(len(p), covers)
    assert set(enumerate_ideals(p).members) == oracles.ideals(len(p), leq)
    assert set(enumerate_filters(p).members) == oracles.filters(len(p), leq)


@given(posets(max_size=7))
def test_complement_bijection(pc):
    p, _ = pc
    ideals = enumerate_ideals(p)
    assert set(ideals.complements().members) == set(enumerate_filters(p).members)


@given(posets(max_size=6))
def test_ideals_closed_under_union_and_intersection(pc):
    p, _ = pc
    fam = set(enumerate_ideals(p).members)
    assert all(x | y in fam and x & y in fam for x in fam for y in fam)


@given(posets(max_size=7))
def test_cover_round_trip(pc):
    p, _ = pc
    again = build_poset(p.names, [(p.names[x], p.names[y]) for x, y in p.covers()])
    assert again.down == p.down


@given(posets(max_size=7))
def test_linear_extension_respects_order(pc):
    p, _ = pc
    pos = {x: k for k, x in enumerate(p.linear_extension())}
    assert all(pos[x] <= pos[y] for y in range(len(p)) for x in range(len(p)) if p.leq_idx(x, y))


def test_subset_family_is_canonical():
    g = GroundSet(tuple("ab"))
    fam = SubsetFamily(g, (3, 1, 1, 0))
    assert fam.members == (0, 1, 3)


def test_parse_poset_and_format(toy):
    text = format_poset(toy)
    assert parse_poset(text).down == toy.down
    chained = parse_poset("elements: a b c\ncovers: a<b<c\n")
    assert chained.leq("a", "c")


@pytest.mark.parametrize(
    "text",
    ["covers: a<b", "elements: a b\ncovers: a<z", "elements: a b\ncovers: a-b", "elements: a a"],
)
def test_parse_poset_errors(text):
    with pytest.raises((ParseError, UnknownElement)):
        parse_poset(text)
