"""Exception hierarchy shared by every qmlen module."""


class QmlenError(Exception):
    pass


class DomainError(QmlenError, ValueError):
    """Input outside an operation's domain (mismatched groups, bad exponents...)."""


class ParseError(DomainError):
    def __init__(self, message: str, text: str = "", position: int = 0):
        self.text = text
        self.position = position
        if text:
            message = f"{message} at position {position}: {text!r}"
        super().__init__(message)


class ResourceError(QmlenError, RuntimeError):
    """A search hit its configured memory cap.

    ``partial`` holds whatever was still valid when the cap was reached
    (a completed radius, a lower bound on a defect, ...).
    """

    def __init__(self, message: str, partial=None):
        super().__init__(message)
        self.partial = partial


class NoCertificateError(DomainError):
    """The quasimorphism vanishes (or may vanish) on g, so it proves nothing."""


class InvariantViolation(QmlenError, AssertionError):
    """An internal cross-check failed; downstream certificates are void."""
