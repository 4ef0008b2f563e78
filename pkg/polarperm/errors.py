class PolarpermError(Exception):
    """Base class of every error raised by polarperm."""


class DomainError(PolarpermError, ValueError):
    """An argument lies outside the domain of the operation."""


class InvalidDivisorError(DomainError, ZeroDivisionError):
    """Exact division by the integer zero was requested."""


class DivisibilityError(PolarpermError, ArithmeticError):
    """The element is not divisible by the integer in this ring."""


class IdentityViolation(PolarpermError, AssertionError):
    """An identity that must hold produced a different value."""


class MethodDisagreementError(PolarpermError):
    """Two evaluators of the same matrix function returned different values."""

    def __init__(self, message, dump=None):
        super().__init__(message)
        self.dump = dump or {}


class DocumentError(PolarpermError, ValueError):
    """A matrix document failed to parse or validate."""

    def __init__(self, message, line=None, column=None, where=None):
        self.line = line
        self.column = column
        self.where = where
        context = []
        if line is not None:
            context.append('line %d' % line)
        if column is not None:
            context.append('column %d' % column)
        if where:
            context.append('at %s' % where)
        if context:
            message = '%s (%s)' % (message, ', '.join(context))
        super().__init__(message)
