"""Exception types shared across the toolkit.

Every error that should surface as a CLI diagnostic derives from MLKError;
the CLI maps those to exit status 2 (usage/input) unless noted otherwise.
"""


class MLKError(Exception):
    pass


class ParseError(MLKError):
    """Text did not conform to the grammar; carries a character position."""

    def __init__(self, message, text=None, pos=None):
        self.pos = pos
        self.text = text
        if pos is not None:
            message = f"{message} (at position {pos})"
        super().__init__(message)


class IntervalError(MLKError):
    pass


class WrongLogic(MLKError):
    pass


class NotHIF(MLKError):
    pass


class NotBounded(MLKError):
    pass


class DepthExceeded(MLKError):
    pass


class UnboundVariable(MLKError):
    pass


class NotInFragment(MLKError):
    pass


class MissingCoreTranslation(MLKError):
    pass


class NoSuchElement(MLKError):
    pass


class NuUnavailable(MLKError):
    pass


class InvalidNu(MLKError):
    pass


class NonPositiveScale(MLKError):
    pass


class UnexpectedAtomShape(MLKError):
    pass


class NameClash(MLKError):
    pass


class PoolTooSmall(MLKError):
    pass


class IndexOutOfRange(MLKError):
    pass


class WrongBound(MLKError):
    pass


class InfiniteReach(MLKError):
    pass


class CorpusCorrupt(MLKError):
    pass
