"""Exception hierarchy.  ``code`` is the machine-readable name used by the CLI."""


class ConeError(Exception):
    code = "ConeError"


class DimensionMismatch(ConeError, ValueError):
    code = "DimensionMismatch"


class ZeroFunctional(ConeError, ValueError):
    code = "ZeroFunctional"

    def __init__(self, index: int):
        super().__init__(f"functional {index} is identically zero")
        self.index = index


class DependentFunctional(ConeError, ValueError):
    code = "DependentFunctional"

    def __init__(self, index: int):
        super().__init__(f"functional {index} lies in the span of its predecessors")
        self.index = index


class EmptyCone(ConeError):
    code = "EmptyCone"


class NotMember(ConeError):
    code = "NotMember"


class IsMember(ConeError):
    code = "IsMember"


class NotAsymmetric(ConeError):
    code = "NotAsymmetric"


class NotDisjoint(ConeError):
    code = "NotDisjoint"


class ConstructionStuck(ConeError):
    code = "ConstructionStuck"


class CandidateBlowup(ConeError):
    code = "CandidateBlowup"
