"""Domain errors with stable codes for the CLI error stream"""


class HermLcdError(Exception):
    """Base class for every error the library raises on purpose"""

    code = "error"

    def __init__(self, message: str = "", **details):
        super().__init__(message or self.code)
        self.details = details

    def as_dict(self) -> dict:
        return {"error": self.code, "message": str(self), **self.details}


# Fields
class NotPrime(HermLcdError):
    code = "not_prime"


class FieldTooLarge(HermLcdError):
    code = "field_too_large"


class NoPrimitivePolynomial(HermLcdError):
    code = "no_primitive_polynomial"


class DivisionByZero(HermLcdError):
    code = "division_by_zero"


class NotInSubfield(HermLcdError):
    code = "not_in_subfield"


class NoConjugationDefined(HermLcdError):
    code = "no_conjugation_defined"


# Matrices
class DimensionMismatch(HermLcdError):
    code = "dimension_mismatch"


class FieldMismatch(HermLcdError):
    code = "field_mismatch"


class Singular(HermLcdError):
    code = "singular"


# Cosets and formulas
class NotCoprime(HermLcdError):
    code = "not_coprime"


class OutOfLemmaRange(HermLcdError):
    code = "out_of_lemma_range"


class UnsupportedM(HermLcdError):
    code = "unsupported_m"


class OutOfRange(HermLcdError):
    code = "out_of_range"


# Polynomials
class ZeroConstantTerm(HermLcdError):
    code = "zero_constant_term"


class ProjectionFailure(HermLcdError):
    code = "projection_failure"


# Codes
class NotADivisor(HermLcdError):
    code = "not_a_divisor"


class NotCosetClosed(HermLcdError):
    code = "not_coset_closed"


class CriterionMismatch(HermLcdError):
    code = "criterion_mismatch"


class DegenerateCode(HermLcdError):
    code = "degenerate_code"


class BudgetExceeded(HermLcdError):
    code = "budget_exceeded"


class InconsistentEnumerator(HermLcdError):
    code = "inconsistent_enumerator"


class TooManyFactors(HermLcdError):
    code = "too_many_factors"


# Masking
class NotHermitianLcd(HermLcdError):
    code = "not_hermitian_lcd"


class DetectionFailure(HermLcdError):
    code = "detection_failure"


# Command line and environment
class UsageError(HermLcdError):
    code = "usage_error"


class ConfigError(HermLcdError):
    code = "config_error"
