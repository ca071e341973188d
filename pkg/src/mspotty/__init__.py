"""Exact m-spotty Rosenbloom-Tsfasman weight enumerators over finite Frobenius rings."""

from .codes import ByteLayout, Code, dual, inner_product, span
from .cyclotomic import CycInt, root
from .macwilliams import (
    VTable,
    fourier_oracle,
    s_value,
    s_value_oracle,
    transform,
    v_table,
    verify_identity,
)
from .poly import Poly
from .rings import FiniteRing, RingSpec, build, parse_spec, units, verify_generating_character
from .weights import (
    DistributionTable,
    distribution,
    enumerator,
    mspotty_distance,
    mspotty_weight,
    rt_weight,
    weight_vector,
)

__version__ = "0.1.0"
