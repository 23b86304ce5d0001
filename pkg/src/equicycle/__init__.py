"""Equitably 2-colourable ``l``-cycle decompositions of complete graphs.

Odd ``l >= 7`` and ``v = 1`` or ``l (mod 2l)``: build with :func:`construct`,
check with :func:`verify`, save and load with :mod:`equicycle.certificate`.
"""

from .assembly import UnsupportedParameters, construct, decompose_v1, decompose_vl
from .blowup import decompose_blowup, decompose_c3_blowup, decompose_c5_blowup
from .core import (
    BLUE,
    INF,
    RED,
    Blown,
    Blowup,
    Cayley,
    Colouring,
    Complete,
    CompleteMinusFactor,
    ConstructionError,
    Cycle,
    CycleSystem,
    MalformedCycleError,
    ParameterError,
    Plain,
    Rot,
    SearchBudgetExceeded,
)
from .rotational import decompose_k2l1, decompose_k4l1
from .verifier import Expectations, Verdict, verify

__version__ = "0.1.0"

__all__ = [
    "BLUE",
    "INF",
    "RED",
    "Blown",
    "Blowup",
    "Cayley",
    "Colouring",
    "Complete",
    "CompleteMinusFactor",
    "ConstructionError",
    "Cycle",
    "CycleSystem",
    "Expectations",
    "MalformedCycleError",
    "ParameterError",
    "Plain",
    "Rot",
    "SearchBudgetExceeded",
    "UnsupportedParameters",
    "Verdict",
    "construct",
    "decompose_blowup",
    "decompose_c3_blowup",
    "decompose_c5_blowup",
    "decompose_k2l1",
    "decompose_k4l1",
    "decompose_v1",
    "decompose_vl",
    "verify",
]
