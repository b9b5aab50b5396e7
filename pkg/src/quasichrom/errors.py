"""Exception hierarchy shared by every module."""


class QuasiChromError(Exception):
    """Base class for all errors raised by quasichrom."""


class InputError(QuasiChromError, ValueError):
    """Malformed input: bad group descriptor, element or index."""


class ParseError(InputError):
    def __init__(self, field: str, message: str):
        self.field = field
        super().__init__(f"{field}: {message}")


class ElementNotInGroupError(InputError):
    pass


class BadIndexError(InputError, IndexError):
    pass


class NotAMultipleError(InputError):
    pass


class PreconditionError(InputError):
    pass


class FreeGroupRequiredError(PreconditionError):
    pass


class ZeroElementError(PreconditionError):
    pass


class CapExceededError(QuasiChromError):
    """A configured enumeration guardrail would be exceeded.

    Never silently truncated: callers raise the cap explicitly.
    """


class ListTooLargeError(CapExceededError):
    pass


class EnumerationTooLargeError(CapExceededError):
    pass
