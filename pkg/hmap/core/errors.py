class HypermapError(Exception):
    """Base class for every error raised by the hypermap library."""


class PreconditionError(HypermapError):
    """A checked operation was called outside its precondition.

    ``predicate`` names the precondition (``prec_I``, ``prec_L``, ``inv_hmap``,
    ``planar``, ``ring`` ...), ``conjunct`` the part of it that failed.
    """

    def __init__(self, predicate, conjunct, detail=None):
        self.predicate = predicate
        self.conjunct = conjunct
        self.detail = detail
        msg = f"{predicate}: {conjunct}"
        if detail:
            msg += f" ({detail})"
        super().__init__(msg)


class InvariantViolation(HypermapError):
    """An invariant guaranteed under inv_hmap did not hold."""


class UnknownDart(HypermapError):
    def __init__(self, dart):
        self.dart = dart
        super().__init__(f"dart {dart} does not exist")


class ParseError(HypermapError):
    def __init__(self, line_no, line, reason):
        self.line_no = line_no
        self.line = line
        self.reason = reason
        super().__init__(f"line {line_no}: {reason}: {line!r}")
