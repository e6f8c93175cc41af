"""Exception types shared across the toolkit."""


class BracekitError(Exception):
    """Base class for every error raised by bracekit."""


class GraphError(BracekitError, ValueError):
    """A graph could not be constructed or violates an operation's input contract."""


class Graph6Error(BracekitError, ValueError):
    """Malformed graph6 input; ``offset`` is the index of the offending byte."""

    def __init__(self, message: str, offset: int):
        super().__init__(f"{message} (byte offset {offset})")
        self.offset = offset


class BudgetExceeded(BracekitError):
    """An exhaustive search hit its configured limit before finishing.

    ``partial`` is the amount of work completed (objects found, subsets
    tried, ...) when the limit was reached.
    """

    def __init__(self, what: str, limit: int, partial: int = 0):
        super().__init__(f"{what}: budget of {limit} exceeded after {partial}")
        self.what = what
        self.limit = limit
        self.partial = partial


class TooSmall(BracekitError, ValueError):
    pass


class NotMatchingCovered(BracekitError, ValueError):
    pass


class NoPerfectMatching(BracekitError, ValueError):
    pass


class NotTight(BracekitError, ValueError):
    pass


class CutHypothesisError(BracekitError, ValueError):
    """A cut fails one of the hypotheses required by a balance check."""


class ConstructionError(BracekitError, ValueError):
    """Invalid input to star product, trisum or family recipes."""


class RotationError(BracekitError, ValueError):
    pass
