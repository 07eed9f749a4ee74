"""Instance generators: bundled scenarios, random sweeps, and hard covers."""

from __future__ import annotations

import random
from dataclasses import dataclass
from importlib import resources

from refex.genre import GenreProfile, load_genre
from refex.kb import AttributeValue, ContextSet, Entity, KnowledgeBase, load_kb

ATTRIBUTE_POOL = ("type", "colour", "size", "manufacturer", "material")


@dataclass(frozen=True)
class Instance:
    kb: KnowledgeBase
    context: ContextSet
    referent: str
    genre: GenreProfile
    seed: int | None = None


def data_text(name: str) -> str:
    return resources.files("refex").joinpath("data", name).read_text(encoding="utf-8")


def bundled_kb(name: str) -> KnowledgeBase:
    """One of ``red_green``, ``staedtler``, ``table``, ``greedy_trap``."""
    return load_kb(data_text(f"{name}.json"))


def bundled_genre(name: str) -> GenreProfile:
    return load_genre(data_text(f"{name}.json"))


def greedy_trap() -> Instance:
    kb = bundled_kb("greedy_trap")
    return Instance(kb, kb.context(kb.entities), "r", bundled_genre("casual"))


def random_instance(
    rng: random.Random,
    entities: tuple[int, int] = (2, 8),
    attributes: tuple[int, int] = (1, 5),
    values: tuple[int, int] = (2, 4),
    p_missing: float = 0.1,
) -> Instance:
    """Random knowledge base whose entities all sit in the context.

    Each attribute gets its own value pool; an entity occasionally lacks an
    attribute altogether. The genre prefers a random ordered subset of the
    attributes in play.
    """
    n_ent = rng.randint(*entities)
    attrs = ATTRIBUTE_POOL[: rng.randint(*attributes)]
    pools = {a: [f"{a[:3]}{k}" for k in range(rng.randint(*values))] for a in attrs}
    ents = []
    for i in range(n_ent):
        props = frozenset(
            AttributeValue(a, rng.choice(pools[a])) for a in attrs if rng.random() >= p_missing
        )
        ents.append(Entity(f"e{i}", props))
    kb = KnowledgeBase.from_entities(ents)
    preferred = list(attrs)
    rng.shuffle(preferred)
    genre = GenreProfile("random", tuple(preferred[: rng.randint(0, len(preferred))]))
    return Instance(kb, kb.context(kb.entities), rng.choice(sorted(kb.entities)), genre)


def sweep(n: int, seed: int = 0) -> list[Instance]:
    out = []
    for k in range(n):
        inst = random_instance(random.Random(seed * 1_000_003 + k))
        out.append(Instance(inst.kb, inst.context, inst.referent, inst.genre, seed * 1_000_003 + k))
    return out


def hard_instance(n_properties: int, n_distractors: int = 10) -> Instance:
    """A cover instance whose minimum size is ``n_distractors``.

    Property ``j`` of the referent is false of distractor ``j % n_distractors``
    and true of every other one, so one property per distractor is needed and
    exhaustive search must reject every smaller subset first.
    """
    if n_properties < n_distractors:
        raise ValueError("need at least one property per distractor")
    attrs = [f"a{j:02d}" for j in range(n_properties)]
    ents = [Entity("r", frozenset(AttributeValue(a, "r") for a in attrs))]
    for i in range(n_distractors):
        ents.append(
            Entity(
                f"d{i:02d}",
                frozenset(AttributeValue(a, "x" if j % n_distractors == i else "r") for j, a in enumerate(attrs)),
            )
        )
    kb = KnowledgeBase.from_entities(ents)
    return Instance(kb, kb.context(kb.entities), "r", GenreProfile("hard", tuple(attrs)))
