from .errors import (PolarpermError, DomainError, InvalidDivisorError, DivisibilityError, IdentityViolation,
                     MethodDisagreementError, DocumentError)
from .matrices import SquareMatrix, CubeMatrix, FreeParams
from .identities import (IdentityCheck, per_definitional, per_identity, per_ryser, per_polarized,
                         det_definitional, det_identity, det_gaussian, check_corollary1, det_zero_criterion,
                         eper_definitional, eper_identity, check_corollary2, eper_zero_criterion,
                         detp_definitional, detp_identity)

__version__ = '1.0'
