"""Exception hierarchy shared by every module of the package."""


class FreeLatError(Exception):
    """Base class for all errors raised by :mod:`freelat`."""


class ParseError(FreeLatError, ValueError):
    """Malformed text input (poset, implication, presentation or set files)."""


class TermSyntaxError(ParseError):
    """A lattice term string does not match the term grammar."""


class UnknownElement(FreeLatError, ValueError):
    """A name or index does not belong to the ground set."""


class CycleError(FreeLatError, ValueError):
    """The cover digraph of a would-be poset contains a directed cycle."""


class InvalidStructure(FreeLatError, ValueError):
    """Input is not the structure it claims to be (non-lattice, bad join table, ...)."""


class NotALattice(InvalidStructure):
    pass


class InconsistentJoins(InvalidStructure):
    """Defined joins of a partial semilattice contradict the order or each other."""


class CapExceeded(FreeLatError, RuntimeError):
    """A configured size cap was hit; the computation was abandoned."""


class NotClosed(FreeLatError, ValueError):
    pass


class NotIrreducible(FreeLatError, ValueError):
    pass


class WidthOverflow(FreeLatError, OverflowError):
    """A result does not fit the configured machine word width."""
