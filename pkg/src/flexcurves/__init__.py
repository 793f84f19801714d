"""Topological constraints on real schemes of flexible curves."""

from .arith import BoundKind, evaluate_bound, largest_prime_power, mp_sequence, vz_minus_s
from .cover import CoverReport, pipeline
from .curve import CurveSpec, Surface
from .forms import QuadraticForm, brown, enumerate_betas, guillou_marin_check
from .genus import genus_tilde, plan_construction
from .scheme import Ambient, RealScheme, classify_regions, enumerate_schemes, format_scheme, parse_scheme
from .verdict import Verdict, check

__all__ = [
    "Ambient", "BoundKind", "CoverReport", "CurveSpec", "QuadraticForm", "RealScheme", "Surface", "Verdict",
    "brown", "check", "classify_regions", "enumerate_betas", "enumerate_schemes", "evaluate_bound",
    "format_scheme", "genus_tilde", "guillou_marin_check", "largest_prime_power", "mp_sequence",
    "parse_scheme", "pipeline", "plan_construction", "vz_minus_s",
]
