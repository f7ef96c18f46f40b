"""Exception hierarchy shared by every service and the command line."""


class QuarticError(Exception):
    """Base error with an exit code and optional payload"""
    exit_code = 1

    def __init__(self, message, exit_code=None, payload=None):
        super().__init__(message)
        self.message = message
        if exit_code is not None:
            self.exit_code = exit_code
        self.payload = payload

    def to_dict(self):
        return {
            'success': False,
            'message': self.message,
            'error_code': self.exit_code,
            'details': self.payload
        }


class ConfigError(QuarticError):
    """Raised for malformed or invalid configuration documents"""
    exit_code = 2


class ArityError(QuarticError):
    """Raised when polynomials over different generators are combined"""
    exit_code = 3


class UnknownSymbolError(QuarticError):
    """Raised when a substitution binds a symbol the polynomial does not carry"""
    exit_code = 3


class ZeroPolynomialError(QuarticError):
    """Raised when an operation needs a nonzero polynomial"""
    exit_code = 3


class SingularSystemError(QuarticError):
    """Raised when a linear system has no unique solution"""
    exit_code = 4


class UnsupportedCaseError(QuarticError):
    """Raised when no deformed-oscillator realization applies"""
    exit_code = 5


class NonUnitaryError(QuarticError):
    """Raised when a representation would need a negative norm"""
    exit_code = 6


class DomainTooSmallError(QuarticError):
    """Raised when eigenfunctions do not decay inside the grid"""
    exit_code = 7
