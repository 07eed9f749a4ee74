"""Hearer-side interpretation of a description.

The hearer runs the speaker's own success test, then asks of each item
why it is there. An item whose removal breaks identification is
necessary; one that excludes somebody but could be dropped was redundant
help; one that excludes nobody must be serving some other purpose, which
is labelled but not guessed at.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from refex.errors import NotDistinguishing
from refex.kb import AttributeValue, ContextSet, KnowledgeBase, rules_out, satisfiers


class Outcome(enum.Enum):
    UNIQUE_REFERENT = "UniqueReferent"
    AMBIGUOUS = "Ambiguous"
    NO_REFERENT = "NoReferent"


class Purpose(enum.Enum):
    NECESSARY = "Necessary"
    REDUNDANT_IDENTIFICATIONAL = "RedundantIdentificational"
    SURPLUS = "Surplus"


@dataclass(frozen=True)
class InterpretationReport:
    resolved: frozenset[str]
    outcome: Outcome
    classifications: Mapping[AttributeValue, Purpose] = field(default_factory=dict)

    @property
    def referent(self) -> str | None:
        if self.outcome is Outcome.UNIQUE_REFERENT:
            return next(iter(self.resolved))
        return None

    def to_json(self) -> dict:
        return {
            "outcome": self.outcome.value,
            "resolved": sorted(self.resolved),
            "classifications": {str(k): v.value for k, v in sorted(self.classifications.items())},
        }


def _outcome(resolved: frozenset[str]) -> Outcome:
    if len(resolved) == 1:
        return Outcome.UNIQUE_REFERENT
    return Outcome.NO_REFERENT if not resolved else Outcome.AMBIGUOUS


def resolve(description: Iterable[AttributeValue], context: ContextSet, kb: KnowledgeBase) -> InterpretationReport:
    resolved = satisfiers(description, context, kb)
    return InterpretationReport(resolved, _outcome(resolved))


def attribute_purposes(
    description: Iterable[AttributeValue],
    referent: str,
    context: ContextSet,
    kb: KnowledgeBase,
) -> dict[AttributeValue, Purpose]:
    items = list(description)
    resolved = satisfiers(items, context, kb)
    if resolved != {referent}:
        raise NotDistinguishing(referent, resolved)
    labels = {}
    for item in items:
        rest = [p for p in items if p != item]
        if satisfiers(rest, context, kb) != {referent}:
            labels[item] = Purpose.NECESSARY
        elif rules_out(item, context.member_ids, kb):
            labels[item] = Purpose.REDUNDANT_IDENTIFICATIONAL
        else:
            labels[item] = Purpose.SURPLUS
    return labels


def interpret(
    description: Iterable[AttributeValue],
    context: ContextSet,
    kb: KnowledgeBase,
    referent: str | None = None,
) -> InterpretationReport:
    """Resolve, and classify items too when ``referent`` is the unique result."""
    items = list(description)
    report = resolve(items, context, kb)
    if referent is None:
        return report
    if report.resolved != {referent}:
        raise NotDistinguishing(referent, report.resolved)
    return InterpretationReport(report.resolved, report.outcome, attribute_purposes(items, referent, context, kb))
