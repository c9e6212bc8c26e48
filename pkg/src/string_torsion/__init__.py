"""String topology of lens spaces with exact arithmetic.

The string coproduct on H_3 of the free loop space of L(k, p), its
expression through the homogenized Reidemeister torsion, Whitehead torsion
of power-map homotopy equivalences and its Dennis trace.
"""

from .biforms import (
    BiForm,
    Quotient,
    QuotientContext,
    apply_power_map_biform,
    format_biform,
    homogenize,
    mul_biform,
    normal_form,
    parse_biform,
    sigma_hom,
)
from .errors import (
    DegeneratePoint,
    FreenessViolation,
    LiftError,
    MissingDatum,
    NotAUnit,
    ParameterError,
    PrecisionError,
    UnsupportedContext,
)
from .forms import (
    OneForm,
    ReducedOneForm,
    d_log,
    de_rham_d,
    parse_form,
    pullback_form,
    reduce_relative,
)
from .group_algebra import (
    GroupAlgebraElement,
    PowerMap,
    apply_power_map,
    augmentation,
    invert_unit,
    multiply,
    parse_element,
    sigma,
    torsion_quotient,
)
from .string_ops import (
    LensSpace,
    RhoClass,
    Verdict,
    analyze_kernel,
    compare_lens_spaces,
    coproduct_difference,
    coproduct_rho,
    string_product,
)
from .torsion import (
    FImageTable,
    WhiteheadElement,
    check_transformation,
    dennis_trace,
    reidemeister_biform,
    torsion_map,
    whitehead_of_power_equiv,
)

__version__ = "0.1.0"
