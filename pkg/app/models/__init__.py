"""
数据模型模块
"""

from .base import ExactModel, RationalValue
from .lattice_models import Lattice, DivisorClass
from .surface_models import SurfaceInvariants, HilbertTriple, CurveDivisorData
from .sheaf_models import (
    StabilityBranch,
    SheafChern,
    KoszulDatum,
    FiltrationData,
    FiltrationRow
)
from .enumeration_models import (
    FamilyFilters,
    FamilyQuery,
    ConicBundleSolution,
    ConicBundleCandidate,
    ScrollCandidate,
    DegZBranch,
    DegZEntry,
    PlaneBundleDegrees
)
from .scroll_models import (
    ScrollModel,
    ScrollReport,
    AppendixDegrees,
    PlaneKind,
    Plane,
    MeetKind,
    PlaneMeet,
    IncidenceStructure
)
from .report_models import ReportFormat, CheckKind, CheckLine, CheckReport, CatalogTable

__all__ = [
    "ExactModel",
    "RationalValue",
    "Lattice",
    "DivisorClass",
    "SurfaceInvariants",
    "HilbertTriple",
    "CurveDivisorData",
    "StabilityBranch",
    "SheafChern",
    "KoszulDatum",
    "FiltrationData",
    "FiltrationRow",
    "FamilyFilters",
    "FamilyQuery",
    "ConicBundleSolution",
    "ConicBundleCandidate",
    "ScrollCandidate",
    "DegZBranch",
    "DegZEntry",
    "PlaneBundleDegrees",
    "ScrollModel",
    "ScrollReport",
    "AppendixDegrees",
    "PlaneKind",
    "Plane",
    "MeetKind",
    "PlaneMeet",
    "IncidenceStructure",
    "ReportFormat",
    "CheckKind",
    "CheckLine",
    "CheckReport",
    "CatalogTable"
]
