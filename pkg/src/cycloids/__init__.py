"""Cycloid Petri nets: construction, point equivalence, isomorphism moves, minimal cycles."""

from .cycles import (
    CycleWitness,
    cyc,
    cyc_case_c,
    cyc_case_d,
    cyc_case_e,
    cyc_formula_b,
    cyc_lattice_min,
    shortest_cycle_graph,
)
from .errors import CycloidError
from .lattice import (
    CycloidParams,
    EquivalenceWitness,
    ParamVector,
    Point,
    area,
    canonical,
    corners,
    equivalence_witness,
    equivalent,
    in_fundamental,
    param_vector,
)
from .net import CycloidNet, PlaceId, PlaceKind, build_net, export_dot, export_json, load_json, validate_net
from .semantics import enabled, enabled_set, fire
from .transforms import (
    are_isomorphic_by_closure,
    iso_closure,
    net_isomorphic_oracle,
    phi_symmetric,
    shear,
    symmetric_params,
)

__version__ = "0.1.0"
