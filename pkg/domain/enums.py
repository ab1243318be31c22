from enum import Enum

class LogLevel(Enum):
    """
    Log levels for application logging
    """
    DEBUG = "DEBUG"
    INFO = "INFO"
    WARNING = "WARNING"
    ERROR = "ERROR"
    CRITICAL = "CRITICAL"

class Suite(Enum):
    """Batch front-end suites"""
    MU = "mu"
    TRANSITION = "transition"
    ACTION = "action"
    VERIFY_ALL = "verify-all"
    EXAMPLES = "examples"

class RepresentativeKind(Enum):
    """How Weyl coset representatives are lifted to GL_n"""
    PERMUTATION = "permutation"  # plain permutation matrices
    TITS = "tits"                # signed lift along a reduced word

class CheckStatus(Enum):
    """Outcome of one verification sample"""
    PASSED = "passed"
    FAILED = "failed"
    ERRORED = "errored"
    SKIPPED = "skipped"

class WorkedExample(Enum):
    """Worked examples available to the examples suite"""
    SL2 = "sl2"
    GL3 = "gl3"
    GRASSMANNIAN = "grassmannian"
