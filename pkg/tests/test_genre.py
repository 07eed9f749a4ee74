import json
import random

import pytest
from hypothesis import given, strategies as st

from refex.describe import Description, full_brevity, greedy_heuristic, incremental
from refex.errors import NoDistinguishingDescription, NotDistinguishing, ParseError
from refex.genre import (
    BUILTIN_GENRES,
    GenreProfile,
    WarningReason,
    dump_genre,
    implicature_risk,
    load_genre,
)
from refex.kb import AttributeValue, Entity, KnowledgeBase
from refex.synthetic import bundled_genre, random_instance

STAEDTLER = AttributeValue("manufacturer", "staedtler")
PEN = AttributeValue("type", "pen")


def test_casual_flags_manufacturer(staedtler):
    kb, ctx = staedtler
    warnings = implicature_risk([STAEDTLER, PEN], "pen1", ctx, kb, GenreProfile("casual", ("type", "colour")))
    assert _reasons(warnings, WarningReason.NOT_GENRE_PREFERRED) == {STAEDTLER}
    # type=pen excludes nobody here and can be dropped
    assert _reasons(warnings, WarningReason.SURPLUS_TO_IDENTIFICATION) == {PEN}


def test_inventory_is_clean(staedtler, inventory):
    kb, ctx = staedtler
    warnings = implicature_risk([STAEDTLER, PEN], "pen1", ctx, kb, inventory)
    assert _reasons(warnings, WarningReason.NOT_GENRE_PREFERRED) == set()
    assert implicature_risk([STAEDTLER], "pen1", ctx, kb, inventory) == []


def test_surplus_type_in_singleton(casual):
    kb = KnowledgeBase.from_entities([Entity.of("pen1", type="pen", colour="red")])
    warnings = implicature_risk([PEN], "pen1", kb.context(["pen1"]), kb, casual)
    assert [(w.item, w.reason) for w in warnings] == [(PEN, WarningReason.SURPLUS_TO_IDENTIFICATION)]


def test_empty_description_no_warnings(table, casual):
    kb, ctx = table
    assert implicature_risk([], "table1", ctx, kb, casual) == []


def test_requires_distinguishing(red_green, casual):
    kb, ctx = red_green
    with pytest.raises(NotDistinguishing):
        implicature_risk([PEN], "pen1", ctx, kb, casual)


def test_genre_validation():
    with pytest.raises(ValueError):
        GenreProfile("g", ("type", "type"))
    with pytest.raises(ValueError):
        GenreProfile("", ("type",))


def test_genre_round_trip():
    for g in BUILTIN_GENRES.values():
        assert load_genre(dump_genre(g)) == g
        assert bundled_genre(g.name) == g
    assert list(json.loads(dump_genre(BUILTIN_GENRES["casual"]))) == ["name", "preferred_attributes"]


@pytest.mark.parametrize(
    "doc",
    ['{"name": "x"}', '{"name": "x", "preferred_attributes": "type"}', '{"name": "x", "preferred_attributes": ["a", "a"]}', "{"],
)
def test_genre_malformed(doc):
    with pytest.raises(ParseError):
        load_genre(doc)


instances = st.integers(0, 2**32).map(lambda s: random_instance(random.Random(s)))


def _reasons(warnings, reason):
    return {w.item for w in warnings if w.reason is reason}


@given(instances, st.lists(st.sampled_from(["type", "colour", "size", "manufacturer", "material", "x"]), unique=True))
def test_genre_monotonicity_and_advisory(inst, extra):
    try:
        desc = greedy_heuristic(inst.referent, inst.context, inst.kb)[0]
    except NoDistinguishingDescription:
        return
    before = Description(desc.items)
    narrow = inst.genre
    wide = GenreProfile("wide", narrow.preferred_attributes + tuple(a for a in extra if a not in narrow.preferred_attributes))
    w1 = implicature_risk(desc, inst.referent, inst.context, inst.kb, narrow)
    w2 = implicature_risk(desc, inst.referent, inst.context, inst.kb, wide)
    assert desc == before
    assert _reasons(w2, WarningReason.NOT_GENRE_PREFERRED) <= _reasons(w1, WarningReason.NOT_GENRE_PREFERRED)
    assert _reasons(w2, WarningReason.SURPLUS_TO_IDENTIFICATION) == _reasons(w1, WarningReason.SURPLUS_TO_IDENTIFICATION)
    assert all(w.item in desc for w in w1 + w2)
