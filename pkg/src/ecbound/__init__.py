"""Local data, Galois-image and local-torsion certificates, and class-number
exponent bounds for elliptic curves over Q."""
from .bound import BoundConfig, BoundInput, BoundReport, bound_exponent, full_report, nu_l
from .corpus import CurveRecord, bundled_corpus, parse_curve_record, resolve_curve
from .frobenius import FrobeniusData, trace_of_frobenius
from .galois import ImageEvidence, SurjectivityVerdict, prove_surjective
from .reduction import LocalReductionData, ReductionType, split_type, tate_local_data
from .torsion import (TorStatus, TorsionVerdict, check_tor, check_torsion_away,
                      order_p_lift_test, scan_local_torsion, tate_parameter_test)
from .weierstrass import CoordinateChange, WeierstrassCurve, compute_invariants, minimal_model, transform_curve

__version__ = "0.1.0"
