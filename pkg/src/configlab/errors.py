"""Exception hierarchy shared by every module."""


class ConfigError(Exception):
    """Base class. ``code`` is the machine-readable name used by the CLI."""

    code = "ConfigError"

    def to_dict(self):
        return {"error": self.code, "message": str(self)}


def _make(name, doc):
    return type(name, (ConfigError,), {"code": name, "__doc__": doc})


class NotTactical(ConfigError):
    code = "NotTactical"

    def __init__(self, axis, index, expected, found):
        self.axis = axis
        self.index = index
        super().__init__(
            f"{axis} {index} has degree {found}, expected {expected}"
        )


NotSymmetric = _make("NotSymmetric", "Operation needs v == b and k == r.")
IncompatibleParams = _make("IncompatibleParams", "Direct sum of structures with different k or r.")
IndexOutOfRange = _make("IndexOutOfRange", "Point or block index outside the structure.")
InvalidParams = _make("InvalidParams", "Parameters violate a necessary identity.")
InvalidOrder = _make("InvalidOrder", "No construction for the requested matrix order.")
NotHadamard = _make("NotHadamard", "Matrix rows are not pairwise orthogonal.")
UnsupportedField = _make("UnsupportedField", "Field order is not a supported prime power.")
InvalidDims = _make("InvalidDims", "Subspace dimensions out of range.")
GenusMismatch = _make("GenusMismatch", "Classes built for different genus.")
GenusOutOfRange = _make("GenusOutOfRange", "Genus outside the supported range.")
ZeroVector = _make("ZeroVector", "Transvection along the zero class.")
InvalidN = _make("InvalidN", "Bad size parameter.")
NOutOfRange = _make("NOutOfRange", "Level outside the supported range.")
InvalidV = _make("InvalidV", "Bad point count.")
RootsUnavailable = _make("RootsUnavailable", "Field lacks the required roots of unity.")
DegeneratePlane = _make("DegeneratePlane", "Cutting plane is not in general position.")
DegreeTooSmall = _make("DegreeTooSmall", "Block size too small for a hyperplane realization.")
DimensionMismatch = _make("DimensionMismatch", "Vectors of different ambient dimension.")
Undefined = _make("Undefined", "Quantity is undefined for this input.")
BudgetExceeded = _make("BudgetExceeded", "Search exceeded its node budget.")
