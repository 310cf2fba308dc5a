"""Upper-bound witnesses and lower-bound certificates."""
from .bounds import (
    BoundCertificate,
    Quantity,
    bound_from_qm,
    dehn_certificates,
    mcg_dehn_bounds,
    recompute,
    stable_bound_from_qm,
    sup_on,
    verify_certificate,
    wbg_residual,
)
from .serialize import SchemaError, dumps, from_dict, loads, to_dict
from .witness import (
    EXAMPLE_A,
    EXAMPLE_B,
    EXAMPLE_G,
    CommutatorOf,
    Factor,
    FactorizationWitness,
    TorsionOfOrder,
    involution_power_witness,
    lift_projective_witness,
    projective_torsion_witness,
    sl2z_example_witness,
    twist_commutator_witness,
    verify_witness,
    witness_failure,
)
