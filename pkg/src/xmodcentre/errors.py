"""Exception hierarchy shared by every module of the package."""


class XmodError(Exception):
    """Base class. ``witness`` carries the offending data when there is one."""

    def __init__(self, message, witness=None):
        super().__init__(message)
        self.witness = witness


class NotAGroup(XmodError):
    pass


class NotAHomomorphism(XmodError):
    pass


class NotNormal(XmodError):
    pass


class UnsupportedSpec(XmodError):
    pass


class BudgetExceeded(XmodError):
    pass


class SearchBudgetExceeded(BudgetExceeded):
    pass


class AxiomViolation(XmodError):
    """An axiom failed; ``axiom`` names it (e.g. ``"CM1"``, ``"BCM4"``, ``"peiffer"``)."""

    def __init__(self, axiom, message, witness=None):
        super().__init__(f"{axiom}: {message}", witness)
        self.axiom = axiom


class CM1Violation(AxiomViolation):
    def __init__(self, message, witness=None):
        super().__init__("CM1", message, witness)


class CM2Violation(AxiomViolation):
    def __init__(self, message, witness=None):
        super().__init__("CM2", message, witness)


class ShapeMismatch(XmodError):
    pass


class CheckFailure(XmodError):
    """A verification stage failed; ``stage`` says which one."""

    def __init__(self, stage, message, witness=None):
        super().__init__(f"[{stage}] {message}", witness)
        self.stage = stage


class ExactnessFailure(CheckFailure):
    pass


class NotCongruence(CheckFailure):
    pass


class NotLie(XmodError):
    pass


class ParseError(XmodError):
    def __init__(self, message, location=None):
        where = f" at {location}" if location else ""
        super().__init__(f"{message}{where}", location)
        self.location = location
