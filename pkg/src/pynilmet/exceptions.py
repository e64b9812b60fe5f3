class NilmetError(Exception):
    """Base class of all errors raised by pynilmet."""


class DimensionMismatchError(NilmetError, ValueError):
    pass


class NonFiniteError(NilmetError, ValueError):
    pass


class NotAntisymmetricError(NilmetError, ValueError):
    pass


class IllConditionedError(NilmetError, ValueError):
    pass


class NotALieBracketError(NilmetError, ValueError):
    pass


class NotNilpotentError(NilmetError):
    pass


class StructureError(NilmetError, ValueError):
    """Invalid J-maps, a wrong structure kind or an incompatible dimension."""


class NotSymmetricError(NilmetError, ValueError):
    pass


class ZeroBracketError(NilmetError, ValueError):
    pass


class NotTwoStepError(NilmetError):
    pass


class CenterMembershipError(NilmetError, ValueError):
    pass


class CurvatureConsistencyError(NilmetError):
    """The trace of the Ricci operator disagrees with `-1/4 |mu|^2`."""


class NotMinimalError(NilmetError, ValueError):
    pass


class RationalizationFailedError(NilmetError):
    pass


class FlowDivergenceError(NilmetError):
    pass


class MetricFlowError(NilmetError):
    pass


class DocumentError(NilmetError, ValueError):
    """A bracket document could not be parsed.

    Args:
        message:
            Description of the problem.
        field:
            Location of the offending value, e.g. `brackets[2][0]`.
        line:
            Line number in the JSON text, if known.
    """

    def __init__(
        self, message: str, field: str | None = None, line: int | None = None
    ) -> None:
        location = ""
        if field is not None:
            location += f"{field}: "
        if line is not None:
            location = f"line {line}: " + location
        super().__init__(location + message)
        self.field = field
        self.line = line


class UnknownCatalogEntryError(NilmetError, KeyError):
    pass
