"""Exception types shared across the toolkit."""


class GadgetscopeError(Exception):
    """Base class for all errors raised by this package."""


class BinaryFormatError(GadgetscopeError):
    """The input file is not a loadable ELF64 x86-64 binary."""

    def __init__(self, message, code):
        super().__init__(message)
        self.code = code  # not-a-file | not-elf | unsupported-class | unsupported-machine | malformed-header


class UnsupportedArchError(GadgetscopeError):
    """An analysis was requested on a non x86-64 image."""


class CatalogError(GadgetscopeError):
    """An expressivity class catalog could not be loaded."""

    def __init__(self, message, code):
        super().__init__(message)
        self.code = code  # unknown-builtin | malformed-catalog-file | size-mismatch


class ParamsMismatchError(GadgetscopeError):
    """Two analyses built with different scan parameters were combined."""


class MarkerError(GadgetscopeError):
    """A feature marker scan failed; carries file and line of the offender."""

    def __init__(self, message, code, path=None, line=None):
        super().__init__(message)
        self.code = code  # unbalanced-marker | crossing-regions | duplicate-end
        self.path = path
        self.line = line


class UnknownFeatureError(GadgetscopeError):
    """A removal config names a feature absent from the feature map."""

    def __init__(self, features):
        super().__init__("unknown feature(s): " + ", ".join(sorted(features)))
        self.features = sorted(features)


class SessionError(GadgetscopeError):
    """Session store errors (unknown iteration, double decision, lock)."""

    def __init__(self, message, code):
        super().__init__(message)
        self.code = code  # unknown-session | unknown-iteration | decision-already-recorded | session-closed | locked | missing-analyses
