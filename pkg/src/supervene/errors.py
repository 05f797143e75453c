"""Exception hierarchy.

Every library error derives from SuperveneError. ``exit_code`` is the
process exit status the CLI maps the error to: 2 for malformed input or
bad references, 3 for a check that came back negative.
"""


class SuperveneError(Exception):
    exit_code = 2


class InvalidModelError(SuperveneError):
    """A type invariant was violated at construction time."""


class UnknownPropertyError(SuperveneError):
    """A referenced property name does not resolve in the vocabulary."""


class EmptySubsetError(SuperveneError):
    """An operation that needs a non-empty property subset got an empty one."""


class VocabularyTooLargeError(SuperveneError):
    """Enumeration requested over more properties than the guard allows."""


class NameCollisionError(SuperveneError):
    """A synthesized property name already exists in the vocabulary."""


class NegativeLiteralError(SuperveneError):
    """A closure operation requires positive literals in the rule."""


class MissingClosureDeclarationError(SuperveneError):
    """A closure-assumption check needs a closure set the rule does not declare."""


class MalformedCardError(SuperveneError):
    """A card's visible literal does not mention the rule's properties."""


class KbError(SuperveneError):
    """Base for knowledge-base file errors; carries a source location."""

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        where = ""
        if line is not None:
            where = f"line {line}: " if column is None else f"line {line}, col {column}: "
        super().__init__(where + message)


class ParseError(KbError):
    pass


class UnresolvedReferenceError(KbError):
    pass


class DuplicateIdError(KbError):
    pass


class CheckFailedError(SuperveneError):
    """A required property of the domain does not hold."""

    exit_code = 3


class RuleViolatedError(CheckFailedError):
    """Some entity falsifies the conditional a closure was asked for."""


class ClosureNotSatisfiedError(CheckFailedError):
    """The declared closure assumption fails on the domain."""


class SufficiencyViolatedError(CheckFailedError):
    """A declared sufficient condition holds while the consequent fails."""


class NecessityViolatedError(CheckFailedError):
    """A declared necessary consequent fails while the antecedent holds."""
