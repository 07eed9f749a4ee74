"""Referring-expression generation: distinguishing descriptions, goal planning, hearer-side interpretation."""

from refex._core import BACKEND
from refex.describe import (
    Description,
    GenerationTrace,
    IncrementalOptions,
    TraceStep,
    full_brevity,
    greedy_heuristic,
    incremental,
    incremental_with_trace,
    naive_oracle,
)
from refex.errors import (
    DuplicateAttribute,
    DuplicateEntity,
    InstanceTooLarge,
    InvalidAgenda,
    NoDistinguishingDescription,
    NotDistinguishing,
    ParseError,
    QualityViolation,
    RefexError,
    ReferentNotInContext,
    UnknownEntity,
    VerificationFailure,
)
from refex.genre import CASUAL, INVENTORY, GenreProfile, ImplicatureWarning, WarningReason, implicature_risk
from refex.goals import Goal, GoalAgenda, GoalKind, PlanReport, Strategy, convey, identify, plan_description, validate_agenda
from refex.hearer import InterpretationReport, Outcome, Purpose, attribute_purposes, resolve
from refex.kb import AttributeValue, ContextSet, Entity, KnowledgeBase, dump_kb, load_kb, rules_out, satisfiers

__version__ = "0.1.0"
