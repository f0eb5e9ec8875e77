"""Exception types raised across the package."""


class QRFPVError(Exception):
    pass


class ModulusMismatchError(QRFPVError, ValueError):
    """Operands live over different primes or different lengths."""


class UnsupportedError(QRFPVError, ValueError):
    """Operation is not defined for the given characteristic, length or instance."""


class DomainError(QRFPVError, ValueError):
    pass


class NotQRSettingError(QRFPVError, ValueError):
    """(p, q) does not admit quadratic residue codes."""


class ContractError(QRFPVError, ValueError):
    """A documented precondition on an argument does not hold."""


class BudgetExceededError(QRFPVError, RuntimeError):
    def __init__(self, size, budget):
        super().__init__(f"code has {size} codewords, budget is {budget}")
        self.size = size
        self.budget = budget
