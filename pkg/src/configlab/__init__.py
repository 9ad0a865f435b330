"""Abstract configurations, designs and finite geometries."""

from .catalog import fano
from .designs import design_lambda
from .errors import ConfigError
from .incidence import (
    ConfigParams,
    IncidenceStructure,
    complement,
    direct_sum,
    dual,
    is_lineal,
    s_equivalence_classes,
    validate_tactical,
)
from .symmetry import automorphism_group, canonical_form, is_isomorphic, s_regularity

__version__ = "0.1.0"

__all__ = [
    "ConfigError",
    "ConfigParams",
    "IncidenceStructure",
    "automorphism_group",
    "canonical_form",
    "complement",
    "design_lambda",
    "direct_sum",
    "dual",
    "fano",
    "is_isomorphic",
    "is_lineal",
    "s_equivalence_classes",
    "s_regularity",
    "validate_tactical",
]
