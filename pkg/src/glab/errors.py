"""Shared exception types."""


class GlabError(Exception):
    """Base class for all laboratory errors."""


class ConstructionError(GlabError):
    """A ring, group, or derived object failed its construction-time audit."""


class ScaleError(GlabError):
    """An operation would exceed its configured element bound."""


class ParseError(GlabError):
    """An instance file is malformed; the message carries the line."""


class FalsificationError(GlabError):
    """An identity that must hold on every instance failed.

    This is the loudest error in the package: it means either an
    implementation bug or a counterexample to a law the whole design
    rests on. The message carries the witness.
    """
