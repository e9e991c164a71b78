"""Exception types shared across the package."""


class ConsistencyError(RuntimeError):
    """An internal cross-check failed.

    Raised when two independent computations of the same quantity disagree
    (orbit sizes vs. cover degrees, chi ledgers vs. stated dimension vectors,
    and so on).  This never fires on a correct build; the CLI maps it to
    exit code 1.
    """
