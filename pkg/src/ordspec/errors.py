"""Error taxonomy shared by the library and the command line tool.

Every anticipated failure is one of four kinds, each with a fixed process
exit code so scripted callers can dispatch on it:

* bad invocation / malformed input      -> UsageError, exit 2
* parameters outside a domain of validity -> DomainError, exit 3
* valid but out of implemented scope      -> UnsupportedError (a DomainError)
* computation would exceed a resource cap -> ResourceError, exit 4

A verification run that completes but finds a failing claim exits 1; that is
not an exception, it is a reported verdict.
"""


class OrdspecError(Exception):
    """Base class for all anticipated failures."""

    exit_code = 1


class UsageError(OrdspecError):
    """Malformed invocation: bad flags, unparseable input, schema violations."""

    exit_code = 2


class DomainError(OrdspecError):
    """Parameters violate a precondition (wrong parity, size, primality...)."""

    exit_code = 3


class UnsupportedError(DomainError):
    """Valid parameters outside the implemented scope."""


class ResourceError(OrdspecError):
    """A computation hit an explicit cap (enumeration size, search budget)."""

    exit_code = 4
