"""Witt rings and KO-groups of full flag varieties G/T.

Closed-form results come from :mod:`flagko.flagwitt`; :mod:`flagko.oracle`
checks them by computing the Tate cohomology of ``K^0(G/T)`` directly.
"""

from .flagwitt import generator_reps, injectivity_classifier, ko_groups, witt_ring
from .kernels import BACKEND
from .oracle import build_quotient, oracle_report, verify_generators, verify_main_theorem
from .reptypes import classify, table_one
from .rootdata import build_root_datum, parse_type, weyl_order
from .tate import InvolutiveModule, InvolutiveRing, tate_cohomology

__version__ = "0.1.0"

__all__ = [
    "BACKEND",
    "InvolutiveModule",
    "InvolutiveRing",
    "build_quotient",
    "build_root_datum",
    "classify",
    "generator_reps",
    "injectivity_classifier",
    "ko_groups",
    "oracle_report",
    "parse_type",
    "table_one",
    "tate_cohomology",
    "verify_generators",
    "verify_main_theorem",
    "weyl_order",
    "witt_ring",
]
