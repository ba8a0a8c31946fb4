"""Delaunay CMC surface generator via the DPW loop-group method."""

from ._core import (
    ClosingReport,
    DelaunayClosingReport,
    DelaunayGeometry,
    DelaunayParams,
    MeasurementReport,
    SurfaceMesh,
    check_closing,
    classify,
    export_mesh,
    generate_mesh,
    geometry,
    immerse,
    measure,
    mu,
    neck_bulge_radii,
    profile_first_integral,
)

__all__ = [
    "ClosingReport",
    "DelaunayClosingReport",
    "DelaunayGeometry",
    "DelaunayParams",
    "MeasurementReport",
    "SurfaceMesh",
    "check_closing",
    "classify",
    "export_mesh",
    "generate_mesh",
    "geometry",
    "immerse",
    "measure",
    "mu",
    "neck_bulge_radii",
    "profile_first_integral",
]
