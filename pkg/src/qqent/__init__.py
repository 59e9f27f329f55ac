"""Entanglement dynamics of a qubit-qutrit pair under Heisenberg exchange, DM coupling and z fields."""
from ._accel import backend_name
from .dynamics import PLOT_GRID, STATS_GRID, Propagator, TimeGrid, evolve, evolve_many, make_propagator, state_trajectory
from .entanglement import (
    NegativityTrace,
    TraceStats,
    closed_form_negativity_xxx,
    negativity,
    negativity_trace,
    partial_transpose,
)
from .errors import DegenerateStateError, ValidationError
from .linalg import EigenSystem, hermitian_eig, trace_norm_hermitian, unitary_from_spectrum
from .model import BasisIndex, ModelParams, build_hamiltonian, kron, pauli, spin1
from .states import InitialStateSpec, build_initial_state, density_from_state, spin_coherent

__version__ = "0.1.0"
