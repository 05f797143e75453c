"""Dependence relations, rule closures, and selection-task prediction
over finite propositional domains."""

from .analysis import (
    CompressionReport,
    RhoRelation,
    build_rho,
    compression_report,
    dependence_witness,
    determination,
    determination_witness,
    ontological_dependence,
    supervenience_witness,
    weak_supervenience,
)
from .closure import (
    Bullet,
    BulletRecord,
    ClosureResult,
    ConsequenceReport,
    ca1_consequences,
    ca2_consequences,
    check_ca1,
    check_ca2,
    close_antecedent,
    close_consequent,
)
from .errors import (
    CheckFailedError,
    ClosureNotSatisfiedError,
    DuplicateIdError,
    EmptySubsetError,
    InvalidModelError,
    KbError,
    MalformedCardError,
    MissingClosureDeclarationError,
    NameCollisionError,
    NecessityViolatedError,
    NegativeLiteralError,
    ParseError,
    RuleViolatedError,
    SufficiencyViolatedError,
    SuperveneError,
    UnknownPropertyError,
    UnresolvedReferenceError,
    VocabularyTooLargeError,
)
from .kb import KbDocument, parse_kb, render_kb
from .model import (
    MAX_ENUMERABLE_PROPS,
    Biconditional,
    Conditional,
    Conjunction,
    DomainModel,
    Entity,
    Lattice,
    Literal,
    Projection,
    Vocabulary,
    World,
    build_lattice,
    differs,
    enumerate_worlds,
    project,
    prune,
)
from .oracle import OracleReport, run_oracle
from .render import to_ascii, to_dot
from .selection import (
    READING_ANTECEDENT,
    READING_BICONDITIONAL,
    READING_DOUBLE,
    READING_DUAL,
    READINGS,
    Card,
    ComparisonReport,
    Prediction,
    SelectionTask,
    compare,
    normative_selection,
    predict_selection,
)

__version__ = "0.1.0"

__all__ = [name for name in dir() if not name.startswith("_")]
