"""Exception hierarchy shared by every layer of trusslab."""


class TrussLabError(Exception):
    """Base class for all trusslab errors."""


class NotAssociative(TrussLabError):
    def __init__(self, witness):
        self.witness = witness
        super().__init__(f"operation is not associative, witness {witness}")


class NoIdentity(TrussLabError):
    def __init__(self):
        super().__init__("operation has no two-sided identity")


class MissingInverse(TrussLabError):
    def __init__(self, element):
        self.element = element
        super().__init__(f"element {element} has no two-sided inverse")


class EmptySubset(TrussLabError):
    pass


class NotIdempotent(TrussLabError):
    pass


class SizeMismatch(TrussLabError):
    pass


class NotAGroup(TrussLabError):
    def __init__(self, which, reason):
        self.which = which
        self.reason = reason
        super().__init__(f"({which}) is not a group: {reason}")


class NotVerified(TrussLabError):
    """Raised when an operation requiring a verified structure gets one that fails its axioms."""

    def __init__(self, report):
        self.report = report
        failed = ", ".join(c.name for c in report.failures())
        super().__init__(f"structure does not verify as {report.kind}: {failed}")


class PreconditionViolated(TrussLabError):
    pass


class PostconditionViolated(TrussLabError):
    pass


class IotaNotBijective(TrussLabError):
    pass


class OrderTooLarge(TrussLabError):
    pass


class StructureFormatError(TrussLabError):
    """Base for structure file problems; carries a path into the document."""


class SyntaxFormatError(StructureFormatError):
    pass


class RangeFormatError(StructureFormatError):
    pass


class KindFieldMismatch(StructureFormatError):
    pass
