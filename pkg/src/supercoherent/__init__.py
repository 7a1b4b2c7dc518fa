"""Super-coherent states of the supersymmetric oscillator on a truncated Fock space."""

from .errors import (
    FibonacciOverflow,
    InvalidAngle,
    InvalidConcurrence,
    InvalidDimension,
    InvalidIndex,
    InvalidState,
    NoOrthogonalStates,
    SupercoherentError,
    TruncationError,
    UndefinedQuantity,
)
from .superstate import (
    Annihilator,
    BellLabel,
    SuperOperator,
    SuperState,
    bell,
    generalized_bell,
    partner_annihilator,
    reference_state,
    super_annihilator,
    super_coherent,
    super_number_state,
)
from .entanglement import concurrence_gram, concurrence_minors, entanglement_report, entropy_bits
from .observables import mandel_q, quadrature_stats, uncertainty_product
from .golden import PHI, golden_state

__version__ = "0.1.0"
