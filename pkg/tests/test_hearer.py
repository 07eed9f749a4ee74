import random

import pytest
from hypothesis import given, strategies as st

from refex.describe import full_brevity, greedy_heuristic, incremental
from refex.errors import NoDistinguishingDescription, NotDistinguishing
from refex.hearer import Outcome, Purpose, attribute_purposes, interpret, resolve
from refex.kb import AttributeValue, satisfiers
from refex.synthetic import random_instance

RED = AttributeValue("colour", "red")
PEN = AttributeValue("type", "pen")
BLUE = AttributeValue("colour", "blue")
PAINTED = AttributeValue("condition", "newly-painted")


def test_resolve_examples(red_green):
    kb, ctx = red_green
    assert resolve([RED], ctx, kb).outcome is Outcome.UNIQUE_REFERENT
    assert resolve([RED], ctx, kb).referent == "pen1"
    amb = resolve([PEN], ctx, kb)
    assert (amb.outcome, amb.resolved) == (Outcome.AMBIGUOUS, {"pen1", "pen2"})
    none = resolve([BLUE], ctx, kb)
    assert (none.outcome, none.resolved) == (Outcome.NO_REFERENT, set())


def test_purposes_examples(red_green, table):
    kb, ctx = red_green
    assert attribute_purposes([RED], "pen1", ctx, kb) == {RED: Purpose.NECESSARY}
    assert attribute_purposes([RED, PEN], "pen1", ctx, kb) == {RED: Purpose.NECESSARY, PEN: Purpose.SURPLUS}
    kb, ctx = table
    assert attribute_purposes([PAINTED], "table1", ctx, kb) == {PAINTED: Purpose.SURPLUS}


def test_redundant_identificational():
    from refex.kb import Entity, KnowledgeBase

    kb = KnowledgeBase.from_entities(
        [
            Entity.of("r", type="pen", colour="red", size="big"),
            Entity.of("d", type="pen", colour="green", size="small"),
        ]
    )
    big = AttributeValue("size", "big")
    labels = attribute_purposes([RED, big], "r", kb.context(["r", "d"]), kb)
    assert labels == {RED: Purpose.REDUNDANT_IDENTIFICATIONAL, big: Purpose.REDUNDANT_IDENTIFICATIONAL}


def test_purposes_require_unique(red_green):
    kb, ctx = red_green
    with pytest.raises(NotDistinguishing):
        attribute_purposes([PEN], "pen1", ctx, kb)
    with pytest.raises(NotDistinguishing):
        interpret([RED], ctx, kb, referent="pen2")


instances = st.integers(0, 2**32).map(lambda s: random_instance(random.Random(s)))


@given(instances)
def test_round_trip_and_classification(inst):
    r, ctx, kb = inst.referent, inst.context, inst.kb
    try:
        fb = full_brevity(r, ctx, kb)
    except NoDistinguishingDescription:
        return
    generated = [fb, greedy_heuristic(r, ctx, kb)[0], incremental(r, ctx, kb, inst.genre)[0]]
    for d in generated:
        report = resolve(d, ctx, kb)
        assert report.outcome is Outcome.UNIQUE_REFERENT and report.resolved == {r}
        labels = attribute_purposes(d, r, ctx, kb)
        assert set(labels) == set(d)
        assert attribute_purposes(list(reversed(d.items)), r, ctx, kb) == labels
        for item, purpose in labels.items():
            still = satisfiers(d.without(item), ctx, kb) == {r}
            assert still == (purpose is not Purpose.NECESSARY)
    assert set(attribute_purposes(fb, r, ctx, kb).values()) <= {Purpose.NECESSARY}
