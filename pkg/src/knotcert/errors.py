"""Exception hierarchy shared across the package.

The CLI maps these onto its exit-code contract: input problems (parse,
validation, braid construction) exit 2, unestablished theorem hypotheses
exit 3, and internal consistency traps exit 4.
"""


class KnotCertError(Exception):
    """Base class for all errors raised by this package."""


class ParseError(KnotCertError):
    """Malformed expression text; message carries position and expectation."""


class ValidationError(KnotCertError):
    """Structurally valid expression with invalid parameters."""


class BraidError(KnotCertError):
    """Invalid braid-level input (non-knot closure, bad parameters)."""


class BraidCapError(BraidError):
    """Braid exceeds the supported size cap (64 strands / 4096 letters)."""


class NonSeifertError(KnotCertError):
    """Matrix cannot be normalized as the Seifert matrix of a knot."""


class HypothesesError(KnotCertError):
    """Theorem hypotheses could not be established for the given input."""


class ConsistencyError(KnotCertError):
    """Internal cross-check failed; indicates a bug, never expected on valid rules."""


class CacheError(KnotCertError):
    """Cache file is unreadable or has an unsupported format version."""
