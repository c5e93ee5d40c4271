"""WLAN site-survey toolkit.

Fits log-distance path-loss models to field measurements, predicts RSSI
and coverage regions around an access point, and flags locations whose
link margin calls for a new AP.
"""

from .coverage import (
    DEFAULT_REGION_TABLE,
    HeatmapGrid,
    Region,
    RegionTable,
    classify_distance,
    classify_rssi,
    generate_heatmap,
)
from .fileio import (
    ModelFile,
    parse_survey,
    read_model,
    write_heatmap_csv,
    write_model,
    write_survey,
)
from .fit import FitResult, LocationFit, fit_log_distance, fit_many
from .planner import PlanEntry, PlanReport, link_margin_db, needs_new_ap, plan_surveys
from .propagation import (
    SPEED_OF_LIGHT_M_S,
    LogDistanceModel,
    coverage_radius,
    free_space_path_loss_db,
    friis_received_power,
    log_distance_path_loss_db,
    predict_rssi,
    wavelength_m,
)
from .survey import ApConfig, Sample, Survey
from .synth import SynthSpec, gaussian_stream, generate_survey, uniform_stream
from .units import dbm_to_mw, feet_to_meters, mw_to_dbm, path_loss_db

__version__ = "0.1.0"

__all__ = [
    "ApConfig",
    "DEFAULT_REGION_TABLE",
    "FitResult",
    "HeatmapGrid",
    "LocationFit",
    "LogDistanceModel",
    "ModelFile",
    "PlanEntry",
    "PlanReport",
    "Region",
    "RegionTable",
    "SPEED_OF_LIGHT_M_S",
    "Sample",
    "Survey",
    "SynthSpec",
    "classify_distance",
    "classify_rssi",
    "coverage_radius",
    "dbm_to_mw",
    "feet_to_meters",
    "fit_log_distance",
    "fit_many",
    "free_space_path_loss_db",
    "friis_received_power",
    "gaussian_stream",
    "generate_heatmap",
    "generate_survey",
    "link_margin_db",
    "log_distance_path_loss_db",
    "mw_to_dbm",
    "needs_new_ap",
    "parse_survey",
    "path_loss_db",
    "plan_surveys",
    "predict_rssi",
    "read_model",
    "uniform_stream",
    "wavelength_m",
    "write_heatmap_csv",
    "write_model",
    "write_survey",
]
