"""Logarithmic-oscillation (Barbilian/Apollonian) metric toolkit.

The distance between two query points A, B is ln(M/m), where M and m are the
extrema of the influence ratio (PA)/(PB) over a compact source set K.
"""

from ._core import (
    AdmissibilityError,
    Circle,
    DistanceReport,
    ExtremaOptions,
    ExtremalRatio,
    GeodesicPath,
    InfluenceField,
    SampledSet,
    SourceSet,
    ValidationError,
    apollonius_circle,
    approximate_geodesic,
    barbilian_distance,
    compare_disk,
    distance_1934,
    influence_eval,
    is_degenerate,
    poincare_disk_distance,
    ratio_extrema,
    sample,
    sample_dyadic,
    verify_metric_upgrade,
    verify_weak_distance,
)

__all__ = [
    "AdmissibilityError",
    "Circle",
    "DistanceReport",
    "ExtremaOptions",
    "ExtremalRatio",
    "GeodesicPath",
    "InfluenceField",
    "SampledSet",
    "SourceSet",
    "ValidationError",
    "apollonius_circle",
    "approximate_geodesic",
    "barbilian_distance",
    "compare_disk",
    "distance_1934",
    "influence_eval",
    "is_degenerate",
    "poincare_disk_distance",
    "ratio_extrema",
    "sample",
    "sample_dyadic",
    "verify_metric_upgrade",
    "verify_weak_distance",
]

__version__ = "0.1.0"
