"""Content determination: choosing the properties of a referring expression.

Three strategies share one representation. Every distractor (a context
member other than the referent) gets a bit; each of the referent's
properties becomes a mask of the distractors it rules out. A description
is distinguishing exactly when the union of its masks covers every bit.

* :func:`full_brevity` finds a smallest cover by enumerating index sets in
  order of size (exponential in the referent's property count).
* :func:`greedy_heuristic` repeatedly takes the property excluding the most
  remaining distractors. Cheap, but not always minimal.
* :func:`incremental` walks a genre's preferred attributes in order and keeps
  anything that excludes someone, tolerating redundancy. The iteration,
  contribution and termination rules are a reconstruction; only the
  preferred-attribute ordering itself is given by the literature.

:func:`naive_oracle` is a deliberately separate brute force used by tests.
"""

from __future__ import annotations

import os
from dataclasses import dataclass, field
from itertools import combinations
from typing import Iterable, Iterator, Sequence

from refex import _core
from refex.errors import (
    InstanceTooLarge,
    NoDistinguishingDescription,
    ParseError,
    ReferentNotInContext,
)
from refex.genre import GenreProfile, ImplicatureWarning, WarningReason
from refex.kb import AttributeValue, ContextSet, Entity, KnowledgeBase, satisfiers

DEFAULT_ORACLE_GUARD = 20
TYPE_ATTRIBUTE = "type"


@dataclass(frozen=True)
class Description:
    items: tuple[AttributeValue, ...] = ()

    def __post_init__(self):
        items = tuple(self.items)
        attrs = [p.attribute for p in items]
        if len(set(attrs)) != len(attrs):
            raise ValueError("a description holds at most one value per attribute")
        object.__setattr__(self, "items", items)

    def __iter__(self) -> Iterator[AttributeValue]:
        return iter(self.items)

    def __len__(self) -> int:
        return len(self.items)

    def __contains__(self, item: object) -> bool:
        return item in self.items

    def __str__(self) -> str:
        return self.render()

    def as_set(self) -> frozenset[AttributeValue]:
        return frozenset(self.items)

    def without(self, item: AttributeValue) -> Description:
        return Description(tuple(p for p in self.items if p != item))

    def render(self) -> str:
        """Sorted ``attr=value`` items joined by ``", "``."""
        return ", ".join(str(p) for p in sorted(self.items))

    @classmethod
    def parse(cls, text: str) -> Description:
        parts = [t for t in (s.strip() for s in text.split(",")) if t]
        items = [AttributeValue.parse(t) for t in parts]
        try:
            return cls(tuple(items))
        except ValueError as exc:
            raise ParseError(str(exc)) from None


@dataclass(frozen=True)
class TraceStep:
    item: AttributeValue
    ruled_out: frozenset[str]
    remaining: int
    purpose: str = "identify"


@dataclass(frozen=True)
class GenerationTrace:
    steps: tuple[TraceStep, ...] = ()

    def __iter__(self) -> Iterator[TraceStep]:
        return iter(self.steps)

    def __len__(self) -> int:
        return len(self.steps)

    @property
    def items(self) -> tuple[AttributeValue, ...]:
        return tuple(s.item for s in self.steps)

    def to_json(self) -> list[dict]:
        return [
            {
                "item": str(s.item),
                "ruled_out": sorted(s.ruled_out),
                "remaining": s.remaining,
                "purpose": s.purpose,
            }
            for s in self.steps
        ]


@dataclass(frozen=True)
class IncrementalOptions:
    always_include_type: bool = True


@dataclass(frozen=True)
class _Problem:
    """Bitmask view of one generation task, after any seed is applied."""

    referent: Entity
    distractors: tuple[str, ...]   # bit i <-> distractors[i]
    candidates: tuple[AttributeValue, ...]  # sorted, seed excluded
    masks: tuple[int, ...]
    target: int                    # distractors surviving the seed
    seed: tuple[AttributeValue, ...] = field(default=())

    def ids(self, mask: int) -> frozenset[str]:
        return frozenset(d for i, d in enumerate(self.distractors) if mask >> i & 1)


def _check(r: str, context: ContextSet, kb: KnowledgeBase) -> Entity:
    ent = kb[r]
    for i in context.member_ids:
        kb[i]
    if r not in context:
        raise ReferentNotInContext(r)
    return ent


def _problem(r: str, context: ContextSet, kb: KnowledgeBase, seed: Iterable[AttributeValue] = ()) -> _Problem:
    ent = _check(r, context, kb)
    seed = tuple(seed)
    for p in seed:
        if not ent.has(p):
            raise ValueError(f"seed property {p} is not true of {r!r}")
    distractors = tuple(sorted(context.member_ids - {r}))
    seed_set = set(seed)
    candidates = tuple(p for p in ent.sorted_properties() if p not in seed_set)
    full = (1 << len(distractors)) - 1
    target = full
    masks = []
    for p in seed:
        target &= ~_mask(p, distractors, kb)
    for p in candidates:
        masks.append(_mask(p, distractors, kb) & target)
    return _Problem(ent, distractors, candidates, tuple(masks), target, seed)


def _mask(p: AttributeValue, distractors: Sequence[str], kb: KnowledgeBase) -> int:
    m = 0
    for i, d in enumerate(distractors):
        if not kb[d].has(p):
            m |= 1 << i
    return m


def _remaining_count(mask: int) -> int:
    return mask.bit_count() + 1  # the referent itself always remains


def _replay(problem: _Problem, chosen: Sequence[int], purpose: str = "identify") -> GenerationTrace:
    remaining = problem.target
    steps = []
    for i in chosen:
        out = problem.masks[i] & remaining
        remaining &= ~out
        steps.append(TraceStep(problem.candidates[i], problem.ids(out), _remaining_count(remaining), purpose))
    return GenerationTrace(tuple(steps))


def trace_description(
    items: Iterable[AttributeValue],
    r: str,
    context: ContextSet,
    kb: KnowledgeBase,
    purposes: Sequence[str] | None = None,
) -> GenerationTrace:
    """Replay ``items`` in order, recording what each rules out at its turn."""
    _check(r, context, kb)
    items = list(items)
    purposes = list(purposes) if purposes is not None else ["identify"] * len(items)
    remaining = set(context.member_ids)
    steps = []
    for item, purpose in zip(items, purposes):
        out = frozenset(i for i in remaining if not kb[i].has(item))
        remaining -= out
        steps.append(TraceStep(item, out, len(remaining), purpose))
    return GenerationTrace(tuple(steps))


def full_brevity(
    r: str,
    context: ContextSet,
    kb: KnowledgeBase,
    *,
    seed: Iterable[AttributeValue] = (),
    backend: str | None = None,
) -> Description:
    """Smallest distinguishing description of ``r``.

    Candidate property sets are tried by increasing size, each size in
    lexicographic order of the sorted properties, so ties resolve to the
    lexicographically least set. With a ``seed``, the seed is kept and the
    smallest extension is searched for instead.
    """
    problem = _problem(r, context, kb, seed)
    chosen = _core.min_cover(problem.masks, problem.target, backend)
    if chosen is None:
        raise NoDistinguishingDescription(r, _uncoverable(problem))
    return Description(problem.seed + tuple(problem.candidates[i] for i in chosen))


def greedy_heuristic(
    r: str,
    context: ContextSet,
    kb: KnowledgeBase,
    *,
    seed: Iterable[AttributeValue] = (),
    backend: str | None = None,
) -> tuple[Description, GenerationTrace]:
    """Check success, choose the property ruling out most, extend; repeat.

    Ties go to the lexicographically smallest ``(attribute, value)``. When no
    unused property rules anybody out, the referent cannot be distinguished.
    """
    problem = _problem(r, context, kb, seed)
    chosen = _core.greedy_cover(problem.masks, problem.target, backend)
    if chosen is None:
        raise NoDistinguishingDescription(r, _uncoverable(problem))
    trace = _replay(problem, chosen)
    return Description(problem.seed + trace.items), trace


def _uncoverable(problem: _Problem) -> frozenset[str]:
    union = 0
    for m in problem.masks:
        union |= m
    return problem.ids(problem.target & ~union)


def incremental_with_trace(
    r: str,
    context: ContextSet,
    kb: KnowledgeBase,
    genre: GenreProfile,
    options: IncrementalOptions = IncrementalOptions(),
    *,
    seed: Iterable[AttributeValue] = (),
) -> tuple[Description, list[ImplicatureWarning], GenerationTrace]:
    problem = _problem(r, context, kb, seed)
    by_attr = {p.attribute: i for i, p in enumerate(problem.candidates)}
    seed_attrs = {p.attribute for p in problem.seed}

    remaining = problem.target
    steps: list[TraceStep] = []
    warnings: list[ImplicatureWarning] = []

    def consider(attribute: str) -> bool:
        nonlocal remaining
        i = by_attr.get(attribute)
        if i is None:
            return False
        out = problem.masks[i] & remaining
        if not out:
            return False
        remaining &= ~out
        steps.append(TraceStep(problem.candidates[i], problem.ids(out), _remaining_count(remaining)))
        return True

    for attribute in genre.preferred_attributes:
        if not remaining:
            break
        consider(attribute)
    if remaining:
        fallback = sorted(a for a in by_attr if not genre.prefers(a) and a not in seed_attrs)
        for attribute in fallback:
            if not remaining:
                break
            if consider(attribute):
                item = steps[-1].item
                warnings.append(ImplicatureWarning(item, WarningReason.NOT_GENRE_PREFERRED, genre.name))
    if remaining:
        raise NoDistinguishingDescription(r, problem.ids(remaining))

    chosen_attrs = seed_attrs | {s.item.attribute for s in steps}
    if options.always_include_type and TYPE_ATTRIBUTE in by_attr and TYPE_ATTRIBUTE not in chosen_attrs:
        item = problem.candidates[by_attr[TYPE_ATTRIBUTE]]
        steps.append(TraceStep(item, frozenset(), _remaining_count(remaining), "always_include_type"))

    trace = GenerationTrace(tuple(steps))
    return Description(problem.seed + trace.items), warnings, trace


def incremental(
    r: str,
    context: ContextSet,
    kb: KnowledgeBase,
    genre: GenreProfile,
    options: IncrementalOptions = IncrementalOptions(),
    *,
    seed: Iterable[AttributeValue] = (),
) -> tuple[Description, list[ImplicatureWarning]]:
    """Genre-driven strategy; see :func:`incremental_with_trace` for the trace.

    Preferred attributes are tried in order and a value is kept iff it rules
    out at least one remaining distractor. If they run out before success,
    the referent's other attributes are tried alphabetically and each one
    used produces a ``NOT_GENRE_PREFERRED`` warning. The ``type`` value is
    appended at the end when ``options.always_include_type`` is set.
    """
    desc, warnings, _ = incremental_with_trace(r, context, kb, genre, options, seed=seed)
    return desc, warnings


def oracle_guard() -> int:
    raw = os.environ.get("REFEX_ORACLE_GUARD")
    return int(raw) if raw else DEFAULT_ORACLE_GUARD


def naive_oracle(
    r: str,
    context: ContextSet,
    kb: KnowledgeBase,
    guard: int | None = None,
) -> set[Description]:
    """Every distinguishing description of minimum size, by brute force.

    Tests each of the ``2**n`` subsets of the referent's properties against
    :func:`refex.kb.satisfiers` directly. Items in each result are sorted.
    """
    ent = _check(r, context, kb)
    guard = oracle_guard() if guard is None else guard
    props = ent.sorted_properties()
    if len(props) > guard:
        raise InstanceTooLarge(len(props), guard)

    hits: list[tuple[AttributeValue, ...]] = []
    for size in range(len(props) + 1):
        for subset in combinations(props, size):
            if satisfiers(subset, context, kb) == {r}:
                hits.append(subset)
    if not hits:
        raise NoDistinguishingDescription(r, satisfiers(props, context, kb) - {r})
    best = min(len(h) for h in hits)
    return {Description(h) for h in hits if len(h) == best}
