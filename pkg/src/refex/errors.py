"""Exception hierarchy shared by every refex module."""

from __future__ import annotations


class RefexError(Exception):
    """Base class for all errors raised by refex."""


class ParseError(RefexError, ValueError):
    def __init__(self, message: str, line: int | None = None, column: int | None = None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f" (line {line}" + (f", column {column})" if column is not None else ")")
        super().__init__(message + where)


class DuplicateEntity(RefexError, ValueError):
    def __init__(self, entity_id: str):
        self.entity_id = entity_id
        super().__init__(f"entity {entity_id!r} declared more than once")


class DuplicateAttribute(RefexError, ValueError):
    def __init__(self, entity_id: str, attribute: str):
        self.entity_id = entity_id
        self.attribute = attribute
        super().__init__(f"entity {entity_id!r} declares attribute {attribute!r} more than once")


class UnknownEntity(RefexError, LookupError):
    def __init__(self, entity_id: str):
        self.entity_id = entity_id
        super().__init__(f"unknown entity {entity_id!r}")


class ReferentNotInContext(RefexError, ValueError):
    def __init__(self, referent: str):
        self.referent = referent
        super().__init__(f"referent {referent!r} is not a member of the context set")


class NoDistinguishingDescription(RefexError):
    def __init__(self, referent: str, remaining: frozenset[str] = frozenset()):
        self.referent = referent
        self.remaining = remaining
        msg = f"no distinguishing description exists for {referent!r}"
        if remaining:
            msg += f"; indistinguishable from {', '.join(sorted(remaining))}"
        super().__init__(msg)


class InstanceTooLarge(RefexError):
    def __init__(self, size: int, guard: int):
        self.size = size
        self.guard = guard
        super().__init__(f"referent has {size} properties; oracle guard is {guard}")


class InvalidAgenda(RefexError, ValueError):
    pass


class QualityViolation(RefexError):
    """Raised when an agenda asks to convey something the knowledge base does not assert."""

    def __init__(self, referent: str, false_payloads):
        self.referent = referent
        self.false_payloads = tuple(false_payloads)
        items = ", ".join(str(p) for p in self.false_payloads)
        super().__init__(f"not true of {referent!r} in the knowledge base: {items}")


class NotDistinguishing(RefexError):
    def __init__(self, referent: str, resolved: frozenset[str]):
        self.referent = referent
        self.resolved = resolved
        super().__init__(
            f"description does not pick out {referent!r} uniquely "
            f"(resolves to {{{', '.join(sorted(resolved))}}})"
        )


class VerificationFailure(RefexError, AssertionError):
    """Self-monitoring rejected a planned description. Always a bug."""
