"""Knowledge base of entities described by attribute-value properties.

Everything here is immutable once built. The two primitive queries,
:func:`satisfiers` and :func:`rules_out`, are what every generation and
interpretation routine is built from.
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field
from typing import Iterable, Iterator, Mapping

from refex.errors import DuplicateAttribute, DuplicateEntity, ParseError, UnknownEntity


@dataclass(frozen=True, order=True)
class AttributeValue:
    attribute: str
    value: str

    def __post_init__(self):
        if not isinstance(self.attribute, str) or not self.attribute:
            raise ValueError("attribute must be a non-empty string")
        if not isinstance(self.value, str) or not self.value:
            raise ValueError("value must be a non-empty string")

    def __str__(self) -> str:
        return f"{self.attribute}={self.value}"

    @classmethod
    def parse(cls, text: str) -> AttributeValue:
        """Parse ``attr=value``; surrounding whitespace is ignored."""
        attribute, sep, value = text.partition("=")
        if not sep:
            raise ParseError(f"expected attr=value, got {text!r}")
        try:
            return cls(attribute.strip(), value.strip())
        except ValueError as exc:
            raise ParseError(f"bad property {text!r}: {exc}") from None


@dataclass(frozen=True)
class Entity:
    id: str
    properties: frozenset[AttributeValue]
    _by_attribute: Mapping[str, str] = field(init=False, repr=False, compare=False, hash=False)

    def __post_init__(self):
        if not isinstance(self.id, str) or not self.id:
            raise ValueError("entity id must be a non-empty string")
        props = frozenset(self.properties)
        by_attr: dict[str, str] = {}
        for p in props:
            if p.attribute in by_attr:
                raise DuplicateAttribute(self.id, p.attribute)
            by_attr[p.attribute] = p.value
        object.__setattr__(self, "properties", props)
        object.__setattr__(self, "_by_attribute", by_attr)

    @classmethod
    def of(cls, entity_id: str, **attrs: str) -> Entity:
        return cls(entity_id, frozenset(AttributeValue(a, v) for a, v in attrs.items()))

    def value_of(self, attribute: str) -> str | None:
        return self._by_attribute.get(attribute)

    def has(self, prop: AttributeValue) -> bool:
        return self._by_attribute.get(prop.attribute) == prop.value

    def sorted_properties(self) -> list[AttributeValue]:
        return sorted(self.properties)


@dataclass(frozen=True)
class KnowledgeBase:
    entities: Mapping[str, Entity] = field(default_factory=dict)

    def __post_init__(self):
        for key, ent in self.entities.items():
            if key != ent.id:
                raise ValueError(f"entity stored under {key!r} has id {ent.id!r}")

    @classmethod
    def from_entities(cls, entities: Iterable[Entity]) -> KnowledgeBase:
        table: dict[str, Entity] = {}
        for ent in entities:
            if ent.id in table:
                raise DuplicateEntity(ent.id)
            table[ent.id] = ent
        return cls(table)

    def __getitem__(self, entity_id: str) -> Entity:
        try:
            return self.entities[entity_id]
        except KeyError:
            raise UnknownEntity(entity_id) from None

    def __contains__(self, entity_id: object) -> bool:
        return entity_id in self.entities

    def __len__(self) -> int:
        return len(self.entities)

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.entities))

    def context(self, ids: Iterable[str]) -> ContextSet:
        """Build a context set, checking every id resolves here."""
        members = frozenset(ids)
        for i in members:
            self[i]
        return ContextSet(members)


@dataclass(frozen=True)
class ContextSet:
    member_ids: frozenset[str]

    def __post_init__(self):
        members = frozenset(self.member_ids)
        if not members:
            raise ValueError("context set must be non-empty")
        object.__setattr__(self, "member_ids", members)

    def __contains__(self, entity_id: object) -> bool:
        return entity_id in self.member_ids

    def __iter__(self) -> Iterator[str]:
        return iter(sorted(self.member_ids))

    def __len__(self) -> int:
        return len(self.member_ids)


def satisfiers(description: Iterable[AttributeValue], context: ContextSet | Iterable[str], kb: KnowledgeBase) -> frozenset[str]:
    """Context members possessing every property in ``description``."""
    props = list(description)
    ids = context.member_ids if isinstance(context, ContextSet) else frozenset(context)
    return frozenset(i for i in ids if all(kb[i].has(p) for p in props))


def rules_out(p: AttributeValue, remaining: Iterable[str], kb: KnowledgeBase) -> frozenset[str]:
    """Members of ``remaining`` for which ``p`` does not hold (closed world)."""
    return frozenset(i for i in remaining if not kb[i].has(p))


# --- persistence -----------------------------------------------------------


class _Pairs(list):
    """Raw key/value pairs of a JSON object, duplicates preserved."""


def _position(text: str, needle: str) -> tuple[int | None, int | None]:
    idx = text.find(needle)
    if idx < 0:
        return None, None
    line = text.count("\n", 0, idx) + 1
    return line, idx - (text.rfind("\n", 0, idx) + 1) + 1


def _parse_json(source: str):
    try:
        return json.loads(source, object_pairs_hook=_Pairs)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None


def load_kb(source: str) -> KnowledgeBase:
    """Parse a knowledge-base JSON document.

    The expected shape is ``{"entities": {"<id>": {"<attr>": "<value>", ...}}}``.
    Attribute values must be strings; lists (multi-valued attributes) are rejected.
    """
    doc = _parse_json(source)
    if not isinstance(doc, _Pairs):
        raise ParseError("top level must be a JSON object", 1, 1)
    keys = [k for k, _ in doc]
    if keys.count("entities") != 1 or len(keys) != 1:
        raise ParseError('top level must have exactly one key, "entities"', *_position(source, "{"))
    raw_entities = doc[0][1]
    if not isinstance(raw_entities, _Pairs):
        raise ParseError('"entities" must be an object', *_position(source, '"entities"'))

    table: dict[str, Entity] = {}
    for eid, raw in raw_entities:
        if eid in table:
            raise DuplicateEntity(eid)
        if not eid:
            raise ParseError("entity ids must be non-empty", *_position(source, '""'))
        if not isinstance(raw, _Pairs):
            raise ParseError(f"entity {eid!r} must map to an object", *_position(source, json.dumps(eid)))
        seen: set[str] = set()
        props = []
        for attr, value in raw:
            if attr in seen:
                raise DuplicateAttribute(eid, attr)
            seen.add(attr)
            if not isinstance(value, str):
                raise ParseError(
                    f"entity {eid!r}: value of {attr!r} must be a string", *_position(source, json.dumps(attr))
                )
            if not attr or not value:
                raise ParseError(f"entity {eid!r}: empty attribute or value", *_position(source, json.dumps(eid)))
            props.append(AttributeValue(attr, value))
        table[eid] = Entity(eid, frozenset(props))
    return KnowledgeBase(table)


def dump_kb(kb: KnowledgeBase) -> str:
    doc = {
        "entities": {
            eid: {p.attribute: p.value for p in ent.properties} for eid, ent in kb.entities.items()
        }
    }
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def read_kb(path) -> KnowledgeBase:
    with open(path, encoding="utf-8") as fh:
        return load_kb(fh.read())
