"""Exception hierarchy shared by the whole package."""


class KcutError(Exception):
    """Base class for every error raised by kcut."""


class GraphInvariantError(KcutError):
    """A graph value would violate a structural invariant (irreflexivity,
    antisymmetry, dangling edge endpoints, bad vertex token)."""


class DomainError(KcutError):
    """An operation was called outside its domain (unknown vertex, edge of
    the wrong kind, argument not a tree, and so on)."""


class ValidationError(KcutError):
    """A leaf object or compass fails its own well-formedness conditions."""


class CompositionError(KcutError):
    """A cut cannot be performed: the chosen edges are not distinguished as
    required, or a path covering the new edge would be indecent."""


class RewriteError(KcutError):
    """A rewrite move does not match the construction at the chosen site."""


class ParseError(KcutError):
    """A text input is malformed.  Carries a 1-based line/column position."""

    def __init__(self, message: str, line: int, column: int = 1):
        super().__init__(f"line {line}, column {column}: {message}")
        self.line = line
        self.column = column


class ConfigError(KcutError):
    """A configured bound (enumeration size, retry budget) was exceeded."""
