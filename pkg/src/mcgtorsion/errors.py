"""Shared exception types."""


class ParseError(ValueError):
    """Malformed textual input (words, braids, matrices, presentations).

    Messages always name the offending token and its position so CLI
    users can find the problem without a stack trace.
    """
