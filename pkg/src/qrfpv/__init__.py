"""Quadratic residue codes over the ring F_p + vF_p (v^2 = v).

Ring codes are held as pairs of F_p codes through the CRT split
a + bv -> (a, a + b); see :mod:`qrfpv.linear_code`.
"""
from .arith import PrimeField, RingElement, crt_join, crt_split, is_qr_mod
from .cyclic_ring import RingPoly, poly_mul, poly_mul_S, psi_inverse, psi_transform
from .errors import (
    BudgetExceededError,
    ContractError,
    DomainError,
    ModulusMismatchError,
    NotQRSettingError,
    QRFPVError,
    UnsupportedError,
)
from .gray_weights import WeightKind, gray, gray_image_code, weight
from .linear_code import LinearCode
from .qr_construct import QRFamily, extend, hermitian_augment, qr_family
from .analysis import (
    DistanceReport,
    WeightEnumerator,
    bachoc_extremality,
    enumerate_weights,
    formally_self_dual,
    min_distance,
)
from .verify import (
    TheoremReport,
    verify_gray_properties,
    verify_hermitian_family,
    verify_psi,
    verify_qr_theorems,
)

__version__ = "0.1.0"
