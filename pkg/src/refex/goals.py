"""Planning a single description from an agenda of speaker goals.

An agenda holds one Identify goal and any number of Convey goals about the
same referent. Convey payloads seed the description, the chosen
identification strategy extends it, and the hearer model then checks the
result before anything is reported.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass, field
from typing import Iterable, Mapping

from refex import describe, hearer
from refex.describe import Description, GenerationTrace, IncrementalOptions
from refex.errors import InvalidAgenda, QualityViolation, ReferentNotInContext, VerificationFailure
from refex.genre import CASUAL, GenreProfile, ImplicatureWarning
from refex.kb import AttributeValue, ContextSet, KnowledgeBase


class GoalKind(enum.Enum):
    IDENTIFY = "Identify"
    CONVEY = "Convey"


class Strategy(enum.Enum):
    FULL_BREVITY = "full-brevity"
    GREEDY = "greedy"
    INCREMENTAL = "incremental"


@dataclass(frozen=True)
class Goal:
    kind: GoalKind
    referent: str
    payload: AttributeValue | None = None

    def __post_init__(self):
        if self.kind is GoalKind.IDENTIFY and self.payload is not None:
            raise InvalidAgenda("an Identify goal carries no payload")
        if self.kind is GoalKind.CONVEY and not isinstance(self.payload, AttributeValue):
            raise InvalidAgenda("a Convey goal carries exactly one AttributeValue")

    def __str__(self) -> str:
        if self.payload is None:
            return f"{self.kind.value}({self.referent})"
        return f"{self.kind.value}({self.referent}, {self.payload})"

    def to_json(self) -> dict:
        out = {"kind": self.kind.value, "referent": self.referent}
        if self.payload is not None:
            out["payload"] = str(self.payload)
        return out


def identify(referent: str) -> Goal:
    return Goal(GoalKind.IDENTIFY, referent)


def convey(referent: str, payload: AttributeValue | str) -> Goal:
    if isinstance(payload, str):
        payload = AttributeValue.parse(payload)
    return Goal(GoalKind.CONVEY, referent, payload)


@dataclass(frozen=True)
class GoalAgenda:
    goals: tuple[Goal, ...]

    def __post_init__(self):
        goals = tuple(self.goals)
        n_identify = sum(g.kind is GoalKind.IDENTIFY for g in goals)
        if n_identify != 1:
            raise InvalidAgenda(f"agenda needs exactly one Identify goal, found {n_identify}")
        if len({g.referent for g in goals}) != 1:
            raise InvalidAgenda("all goals in an agenda must share one referent")
        object.__setattr__(self, "goals", goals)

    @classmethod
    def for_referent(cls, referent: str, conveys: Iterable[AttributeValue | str] = ()) -> GoalAgenda:
        return cls((identify(referent), *(convey(referent, p) for p in conveys)))

    @property
    def referent(self) -> str:
        return self.goals[0].referent

    @property
    def payloads(self) -> tuple[AttributeValue, ...]:
        seen: dict[AttributeValue, None] = {}
        for g in self.goals:
            if g.payload is not None:
                seen.setdefault(g.payload)
        return tuple(seen)


def validate_agenda(agenda: GoalAgenda, kb: KnowledgeBase) -> None:
    """Refuse to convey anything the knowledge base does not assert of the referent.

    Raises :class:`QualityViolation` naming every false payload.
    """
    ent = kb[agenda.referent]
    false = [p for p in agenda.payloads if not ent.has(p)]
    if false:
        raise QualityViolation(agenda.referent, false)


@dataclass(frozen=True)
class PlanReport:
    description: Description
    strategy: Strategy
    warnings: tuple[ImplicatureWarning, ...]
    satisfied: tuple[Goal, ...]
    outstanding: tuple[Goal, ...]
    trace: GenerationTrace
    attributions: Mapping[AttributeValue, tuple[str, ...]] = field(default_factory=dict)

    def serving(self, goal: Goal) -> tuple[AttributeValue, ...]:
        """Description items that contribute to ``goal``."""
        label = "convey" if goal.kind is GoalKind.CONVEY else "identify"
        return tuple(
            p for p in self.description
            if label in self.attributions[p] and (goal.payload is None or p == goal.payload)
        )

    def to_json(self) -> dict:
        return {
            "description": sorted(str(p) for p in self.description),
            "strategy": self.strategy.value,
            "trace": self.trace.to_json(),
            "warnings": [w.to_json() for w in self.warnings],
            "goals": [
                {**g.to_json(), "satisfied": True, "served_by": sorted(str(p) for p in self.serving(g))}
                for g in self.satisfied
            ],
            "outstanding": [g.to_json() for g in self.outstanding],
            "attributions": {str(p): list(v) for p, v in sorted(self.attributions.items())},
        }


def plan_description(
    agenda: GoalAgenda,
    context: ContextSet,
    kb: KnowledgeBase,
    genre: GenreProfile = CASUAL,
    strategy: Strategy | str = Strategy.GREEDY,
    options: IncrementalOptions = IncrementalOptions(),
    *,
    backend: str | None = None,
) -> PlanReport:
    """Satisfy every goal on ``agenda`` with one description.

    Convey payloads go in first and count towards identification; the chosen
    strategy then extends them until the referent is picked out. The result
    is resolved by the hearer model and any mismatch raises
    :class:`VerificationFailure`.
    """
    strategy = Strategy(strategy)
    validate_agenda(agenda, kb)
    r = agenda.referent
    if r not in context:
        raise ReferentNotInContext(r)
    seed = agenda.payloads

    warnings: list[ImplicatureWarning] = []
    if strategy is Strategy.FULL_BREVITY:
        desc = describe.full_brevity(r, context, kb, seed=seed, backend=backend)
        purposes = ["identify"] * (len(desc) - len(seed))
    elif strategy is Strategy.GREEDY:
        desc, step_trace = describe.greedy_heuristic(r, context, kb, seed=seed, backend=backend)
        purposes = [s.purpose for s in step_trace]
    else:
        desc, warnings, step_trace = describe.incremental_with_trace(r, context, kb, genre, options, seed=seed)
        purposes = [s.purpose for s in step_trace]

    check = hearer.resolve(desc, context, kb)
    if check.resolved != {r}:
        raise VerificationFailure(
            f"planned description {desc.render()!r} resolves to {sorted(check.resolved)}, not {r!r}"
        )

    trace = describe.trace_description(desc, r, context, kb, ["convey"] * len(seed) + purposes)
    attributions: dict[AttributeValue, tuple[str, ...]] = {}
    for step in trace:
        labels = []
        if step.item in seed:
            labels.append("convey")
        if step.ruled_out:
            labels.append("identify")
        if step.purpose == "always_include_type":
            labels.append("always_include_type")
        attributions[step.item] = tuple(labels)

    return PlanReport(
        description=desc,
        strategy=strategy,
        warnings=tuple(warnings),
        satisfied=agenda.goals,
        outstanding=(),
        trace=trace,
        attributions=attributions,
    )
