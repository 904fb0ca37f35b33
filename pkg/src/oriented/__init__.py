"""Smallest oriented containers (semidisks, circular segments, sectors) of planar point sets."""
from .errors import (ApexInsideHull, DegenerateHull, DegeneratePoint, EmptyInput, GeometryError,
                     InvalidInput, NoCrossover, NotAContainer, TooFewVertices, WrongCase)
from .geometry import Circle, EdgeFrame, Hull, Point, convex_hull, edge_frames, min_enclosing_circle
from .oracle import (OracleConfig, OracleResult, oracle_sector, oracle_segment, oracle_semidisk,
                     random_hull)
from .report import SolveReport
from .sector import Sector, smallest_sector
from .segment import Case, CircularSegment, Objective, classify_case, smallest_segment
from .semidisk import Semidisk, smallest_semidisk, smallest_semidisk_calipers

__all__ = [
    "ApexInsideHull", "Case", "Circle", "CircularSegment", "DegenerateHull", "DegeneratePoint",
    "EdgeFrame", "EmptyInput", "GeometryError", "Hull", "InvalidInput", "NoCrossover",
    "NotAContainer", "Objective", "OracleConfig", "OracleResult", "Point", "Sector", "Semidisk",
    "SolveReport", "TooFewVertices", "WrongCase", "classify_case", "convex_hull", "edge_frames",
    "min_enclosing_circle", "oracle_sector", "oracle_segment", "oracle_semidisk", "random_hull",
    "smallest_sector", "smallest_segment", "smallest_semidisk", "smallest_semidisk_calipers",
]
