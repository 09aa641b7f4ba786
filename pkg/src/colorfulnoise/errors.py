"""Exception hierarchy shared by the whole toolkit.

The CLI maps these onto exit codes: usage problems exit 2, data problems
exit 3, OS-level I/O failures exit 4.
"""


class ColorfulNoiseError(Exception):
    """Base class for all toolkit errors."""


class UsageError(ColorfulNoiseError):
    """Caller passed arguments that cannot be interpreted (CLI exit 2)."""


class DataError(ColorfulNoiseError):
    """Input values violate an operation's contract (CLI exit 3)."""


class ShapeError(DataError):
    """Tensor shapes are incompatible with the requested operation."""


class RankError(DataError):
    """An array has the wrong number of dimensions."""


class HeaderError(DataError):
    """An array container file has a malformed or unsupported header."""


class NonFiniteError(DataError):
    """A tensor contains NaN or infinite entries."""


class HermitianError(DataError):
    """Spectrum bands are not Hermitian-symmetric; no real signal exists."""
