"""Move sensors from a disk onto the vertices of a regular polygon on its boundary."""

__version__ = "0.1.0"

from pgcover.geom import Instance, Placement, Sensor, placement_cost
from pgcover.minmax_decision import FeasibilityWitness, feasible
from pgcover.minmax_opt import compute_lambda_c
from pgcover.minsum import minsum_approx, minsum_boundary, minsum_lower_bound

__all__ = [
    "FeasibilityWitness",
    "Instance",
    "Placement",
    "Sensor",
    "compute_lambda_c",
    "feasible",
    "minsum_approx",
    "minsum_boundary",
    "minsum_lower_bound",
    "placement_cost",
]
