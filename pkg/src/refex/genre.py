"""Genre profiles and implicature-risk analysis.

A genre is reduced to an ordered list of attributes that speakers in that
genre conventionally use when all they want is identification. The two
built-in profiles are illustrative reconstructions, not corpus-derived.
"""

from __future__ import annotations

import enum
import json
from dataclasses import dataclass
from typing import Iterable

from refex.errors import NotDistinguishing, ParseError, ReferentNotInContext
from refex.kb import AttributeValue, ContextSet, KnowledgeBase, rules_out, satisfiers


@dataclass(frozen=True)
class GenreProfile:
    name: str
    preferred_attributes: tuple[str, ...]

    def __post_init__(self):
        if not isinstance(self.name, str) or not self.name:
            raise ValueError("genre name must be a non-empty string")
        attrs = tuple(self.preferred_attributes)
        if len(set(attrs)) != len(attrs):
            raise ValueError(f"genre {self.name!r} lists an attribute twice")
        if not all(isinstance(a, str) and a for a in attrs):
            raise ValueError("preferred attributes must be non-empty strings")
        object.__setattr__(self, "preferred_attributes", attrs)

    def prefers(self, attribute: str) -> bool:
        return attribute in self.preferred_attributes


CASUAL = GenreProfile("casual", ("type", "colour", "size"))
INVENTORY = GenreProfile("inventory", ("type", "manufacturer", "colour"))
BUILTIN_GENRES = {g.name: g for g in (CASUAL, INVENTORY)}


def load_genre(source: str) -> GenreProfile:
    try:
        doc = json.loads(source)
    except json.JSONDecodeError as exc:
        raise ParseError(exc.msg, exc.lineno, exc.colno) from None
    if not isinstance(doc, dict) or set(doc) != {"name", "preferred_attributes"}:
        raise ParseError('genre must be an object with exactly "name" and "preferred_attributes"')
    prefs = doc["preferred_attributes"]
    if not isinstance(prefs, list):
        raise ParseError('"preferred_attributes" must be a list')
    try:
        return GenreProfile(doc["name"], tuple(prefs))
    except ValueError as exc:
        raise ParseError(str(exc)) from None


def dump_genre(genre: GenreProfile) -> str:
    doc = {"name": genre.name, "preferred_attributes": list(genre.preferred_attributes)}
    return json.dumps(doc, sort_keys=True, indent=2, ensure_ascii=False) + "\n"


def read_genre(path_or_name: str) -> GenreProfile:
    """Load a genre from a JSON file, or return a built-in profile by name."""
    if path_or_name in BUILTIN_GENRES:
        return BUILTIN_GENRES[path_or_name]
    with open(path_or_name, encoding="utf-8") as fh:
        return load_genre(fh.read())


class WarningReason(enum.Enum):
    NOT_GENRE_PREFERRED = "NotGenrePreferred"
    SURPLUS_TO_IDENTIFICATION = "SurplusToIdentification"


@dataclass(frozen=True)
class ImplicatureWarning:
    item: AttributeValue
    reason: WarningReason
    genre: str | None = None

    def __str__(self) -> str:
        if self.reason is WarningReason.NOT_GENRE_PREFERRED:
            where = f" in genre {self.genre}" if self.genre else ""
            return f"{self.item}: attribute not identification-preferred{where}"
        return f"{self.item}: surplus to identification"

    def to_json(self) -> dict:
        return {"item": str(self.item), "reason": self.reason.value}


def implicature_risk(
    description: Iterable[AttributeValue],
    referent: str,
    context: ContextSet,
    kb: KnowledgeBase,
    genre: GenreProfile,
) -> list[ImplicatureWarning]:
    """Flag items a hearer might read as meant for more than identification.

    Advisory only: the description is never altered. Items whose attribute
    is outside the genre's preferred list get ``NOT_GENRE_PREFERRED``; items
    that rule out nobody and can be dropped get ``SURPLUS_TO_IDENTIFICATION``.
    """
    items = list(description)
    kb[referent]
    if referent not in context:
        raise ReferentNotInContext(referent)
    resolved = satisfiers(items, context, kb)
    if resolved != {referent}:
        raise NotDistinguishing(referent, resolved)

    warnings = []
    for item in items:
        if not genre.prefers(item.attribute):
            warnings.append(ImplicatureWarning(item, WarningReason.NOT_GENRE_PREFERRED, genre.name))
    for item in items:
        rest = [p for p in items if p != item]
        if satisfiers(rest, context, kb) == {referent} and not rules_out(item, context.member_ids, kb):
            warnings.append(ImplicatureWarning(item, WarningReason.SURPLUS_TO_IDENTIFICATION, genre.name))
    return warnings
