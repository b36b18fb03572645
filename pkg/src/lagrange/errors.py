"""Exception hierarchy; each class carries the CLI exit code it maps to."""


class LagrangeError(Exception):
    exit_code = 1


class ParseError(LagrangeError, ValueError):
    exit_code = 3


class ValidationError(LagrangeError, ValueError):
    exit_code = 4

    def __init__(self, message, level=None):
        super().__init__(message)
        self.level = level


class DomainError(LagrangeError, ValueError):
    exit_code = 5


class ResourceError(LagrangeError, RuntimeError):
    exit_code = 6
