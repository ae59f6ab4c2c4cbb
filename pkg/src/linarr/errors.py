"""Exception taxonomy shared by the library and the CLI exit-code mapping."""


class LinarrError(Exception):
    pass


class InputError(LinarrError, ValueError):
    """Bad graph, arrangement, file or argument (CLI exit code 2)."""


class CapExceeded(LinarrError):
    """An exhaustive enumeration would exceed its configured cap (exit code 3)."""


class UndefinedStatistic(LinarrError):
    """Requested statistic does not exist here, e.g. a z-score when V[D] = 0
    or <k^2> of a graph with no vertices (exit code 4)."""
