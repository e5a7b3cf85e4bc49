"""Exception types shared across the package."""


class StarColorError(Exception):
    """Base class for all package-specific errors."""


class InvalidGraphError(StarColorError):
    """Graph construction violated an invariant (loop, duplicate, range)."""


class EncodingError(StarColorError):
    """Malformed graph6 / edge-list / document input."""


class UnknownGraphError(StarColorError):
    """Unrecognized named-graph identifier or out-of-range parameter."""


class PartialColoringError(StarColorError):
    """An operation requiring a total coloring received a partial one."""


class NotStarColoringError(StarColorError):
    """An operation requiring a star coloring received a non-star one."""


class NotCompleteGraphError(StarColorError):
    """Counting certificates are only defined over complete graphs."""


class PaletteError(StarColorError):
    """Coloring palette does not match the operation's requirement."""


class PatternInconsistencyError(StarColorError):
    """Local color pattern classification failed; signals an upstream bug."""


class InvalidCoverError(StarColorError):
    """A mapping failed covering-map validation."""


class PreconditionError(StarColorError):
    """Structural precondition violated (non-cubic input, bridge, ...)."""
