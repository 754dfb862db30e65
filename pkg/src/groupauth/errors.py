"""Exception types shared across the package.

Every error raised by the library derives from GroupAuthError so callers can
catch protocol-level failures with a single handler.
"""


class GroupAuthError(Exception):
    pass


# -- algebra ------------------------------------------------------------

class InvalidOperand(GroupAuthError):
    """Operand outside the operation's domain (zero inverse, off-curve point...)."""


class ParamsMismatch(GroupAuthError):
    """Operands belong to different fields or curves."""


class GeneratorSearchFailed(GroupAuthError):
    """No subgroup generator found within the attempt budget (bad order r)."""


# -- pairing ------------------------------------------------------------

class NotInSubgroup(GroupAuthError):
    """Point is not in the prime-order subgroup the pairing is defined on."""


class MillerDegenerate(GroupAuthError):
    """A line function evaluated to zero inside the Miller loop.

    Cannot happen for subgroup inputs routed through the distortion map;
    raised as a guard against misuse.
    """


# -- secret sharing -----------------------------------------------------

class InvalidThreshold(GroupAuthError):
    pass


class ReservedEvaluationPoint(GroupAuthError):
    """x = 0 is the secret's own evaluation point and must never be issued."""


class DuplicateShareX(GroupAuthError):
    pass


# -- symmetric crypto ---------------------------------------------------

class AuthenticationFailed(GroupAuthError):
    """Ciphertext tag did not verify; no plaintext is released."""


# -- protocol -----------------------------------------------------------

class StaleCredential(GroupAuthError):
    pass


class UnknownMember(GroupAuthError):
    pass


class InsufficientShares(GroupAuthError):
    pass


class KeyAgreementFailed(GroupAuthError):
    pass


class NoRoamingAgreement(GroupAuthError):
    """The host group manager has no polynomial for the visitor's home group."""


class HandoverRejected(GroupAuthError):
    pass


class CapacityExceeded(GroupAuthError):
    """The group's public-key range has no unused values left."""


class UnknownMessageKind(GroupAuthError):
    pass


# -- simulation / CLI ---------------------------------------------------

class UnknownScenario(GroupAuthError):
    pass


class ConfigError(GroupAuthError):
    """Malformed scenario configuration; carries a line number when known."""

    def __init__(self, message, line=None):
        super().__init__(message)
        self.line = line

    def __str__(self):
        base = super().__str__()
        if self.line is not None:
            return f"line {self.line}: {base}"
        return base
