from pynilmet.flow.bracket_flow import FlowTrace, flow_run, grad_F
from pynilmet.flow.metric_flow import MetricTrace, normalized_metric_flow
from pynilmet.flow.probes import orbit_infimum_probe, orbit_path_values

__all__ = [
    "FlowTrace",
    "MetricTrace",
    "flow_run",
    "grad_F",
    "normalized_metric_flow",
    "orbit_infimum_probe",
    "orbit_path_values",
]
