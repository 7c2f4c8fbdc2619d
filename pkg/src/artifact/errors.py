"""Exception types shared across the package."""


class ArtifactError(Exception):
    """Base class for domain errors (CLI exit code 4 unless noted)."""


class NonIntegralMultiplicity(ArtifactError):
    """A class function did not decompose with nonnegative integer multiplicities."""


class NotInFiltration(ArtifactError):
    """An element is not in the filtration level required by an operation."""


class WordTooLong(ArtifactError):
    """A free-group word exceeded the configured letter budget."""


class IndexOutOfRange(ArtifactError):
    """A generator index is outside [n] or indices are not distinct."""


class RankMismatch(ArtifactError):
    """A morphism and an element disagree on the number of arcs."""


class BudgetExceeded(Exception):
    """A computation exceeded its size or time budget (CLI exit code 3)."""
