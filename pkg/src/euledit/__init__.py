"""Near-minimal Eulerian edits of simple graphs, with exact small-graph oracles
and Monte Carlo experiments on G(n, p)."""

from .editors import (
    EditOp,
    EditPlan,
    Mode,
    OpKind,
    VerifyReport,
    apply_plan,
    eulerize,
    parity_lower_bound,
    plan_edit,
    plan_extend,
    plan_reduce,
    verify_plan,
)
from .errors import (
    EulerError,
    FormatError,
    InapplicableOp,
    NotEulerian,
    NotExtendable,
    NotReducible,
    RepairFailed,
)
from .graph import (
    EulerCircuit,
    Graph,
    check_circuit,
    common_neighbors,
    complement,
    components,
    degree_sequence,
    euler_circuit,
    is_connected,
    is_eulerian,
    odd_vertices,
)
from .sampler import classify_p, epsilon_b, odd_degree_prob, sample_gnp

__version__ = "0.1.0"
