"""Exception hierarchy.

Every error carries a stable ``code`` string and the process exit code the
CLI maps it to (2 for bad input, 3 for a rule precondition failure).
"""


class FusionError(Exception):
    code = "FUSION_ERROR"
    exit_code = 1


class InputError(FusionError, ValueError):
    code = "INPUT_ERROR"
    exit_code = 2


class ParseError(InputError):
    """Malformed document text; carries a 1-based line/column when known."""

    code = "PARSE_ERROR"

    def __init__(self, message, line=None, column=None):
        self.line = line
        self.column = column
        if line is not None:
            message = f"{message} (line {line}, column {column})"
        super().__init__(message)


class ValidationError(InputError):
    code = "VALIDATION_ERROR"


class ExprSyntaxError(InputError):
    code = "SYNTAX_ERROR"

    def __init__(self, message, position):
        self.position = position
        super().__init__(f"{message} at position {position}")


class UnknownAtom(InputError):
    code = "UNKNOWN_ATOM"

    def __init__(self, name, position=None):
        self.name = name
        self.position = position
        super().__init__(f"unknown atom {name!r}")


class NegativeMass(ValidationError):
    code = "NEGATIVE_MASS"


class DuplicateFocal(ValidationError):
    code = "DUPLICATE_FOCAL"


class AlphaOutOfRange(ValidationError):
    code = "ALPHA_OUT_OF_RANGE"


class ScaleMismatch(InputError):
    code = "SCALE_MISMATCH"


class RuleError(FusionError):
    code = "RULE_ERROR"
    exit_code = 3


class FrameMismatch(RuleError):
    code = "FRAME_MISMATCH"


class TotalConflict(RuleError):
    code = "TOTAL_CONFLICT"


class TotalMassOnEmpty(RuleError):
    code = "TOTAL_MASS_ON_EMPTY"


class DegenerateOperand(RuleError):
    code = "DEGENERATE_OPERAND"


class DivisionByZeroLabel(RuleError, ZeroDivisionError):
    code = "DIVISION_BY_ZERO_LABEL"


class ZeroDenominator(RuleError, ZeroDivisionError):
    code = "ZERO_DENOMINATOR"


class PreconditionError(RuleError):
    code = "PRECONDITION"
