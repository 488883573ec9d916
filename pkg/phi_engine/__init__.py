from phi_engine.index_tracker import index_map_step
from phi_engine.index_tracker import index_preimage
from phi_engine.index_tracker import track_convergent
from phi_engine.phi_state import PhiState
from phi_engine.phi_state import Rule
from phi_engine.phi_state import StepInfo
from phi_engine.phi_stepper import first_bad_position
from phi_engine.phi_stepper import phi_step
from phi_engine.phi_stepper import scan_horizon
from phi_engine.phi_stepper import singularize_at
from phi_engine.phi_tracer import phi_trace
from phi_engine.phi_tracer import PhiTrace
from phi_engine.phi_tracer import PhiTracer
