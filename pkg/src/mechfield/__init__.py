"""State-space mechanics and quadrature-based field calculators.

The library splits into small layers: :mod:`mechfield.vectors` holds the
3D vector and position algebra, :mod:`mechfield.solver` the generic
differential-equation machinery, :mod:`mechfield.mechanics` concrete
physics (gravity, oscillators, spring chains, pendulums),
:mod:`mechfield.fields` the electric and magnetic field integrators, and
:mod:`mechfield.cli` a scenario-running command line.
"""

from .errors import DomainError
from .fields import (
    BIOT_SAVART_CONSTANT,
    COULOMB_CONSTANT,
    Curve,
    ScalarField,
    VectorField,
    circular_loop,
    crossed_line_integral,
    electric_field_of_line_charge,
    line_integral,
    line_segment,
    magnetic_field_of_line_current,
)
from .mechanics import (
    AngularState,
    AngularStateDeriv,
    EARTH_MASS,
    GRAVITATIONAL_CONSTANT,
    SystemAccFunc,
    SystemState,
    SystemStateDeriv,
    damped_driven_osc,
    euler_cromer_angular_step,
    euler_cromer_system_step,
    gravity_accel,
    pendulum_deriv,
    satellite_accel,
    spring_chain_accel,
    system_equation,
    tx_pairs,
)
from .solver import (
    AccelerationFunction,
    DifferentialEquation,
    EvolutionMethod,
    InitialValueProblem,
    ParticleState,
    ParticleStateDeriv,
    euler_cromer_step,
    euler_method,
    euler_step,
    particle_equation,
    rk4_method,
    shift,
    solution_stream,
    solve_states,
)
from .vectors import (
    ORIGIN,
    Position,
    Vec3,
    X_HAT,
    Y_HAT,
    Z_HAT,
    ZERO,
    displacement,
    format_scalar,
    parse_triple,
    vec_sum,
)

__all__ = [
    "DomainError",
    # vectors
    "Vec3",
    "Position",
    "ZERO",
    "X_HAT",
    "Y_HAT",
    "Z_HAT",
    "ORIGIN",
    "vec_sum",
    "displacement",
    "format_scalar",
    "parse_triple",
    # solver
    "ParticleState",
    "ParticleStateDeriv",
    "AccelerationFunction",
    "DifferentialEquation",
    "EvolutionMethod",
    "InitialValueProblem",
    "shift",
    "euler_step",
    "euler_cromer_step",
    "particle_equation",
    "euler_method",
    "rk4_method",
    "solution_stream",
    "solve_states",
    # mechanics
    "GRAVITATIONAL_CONSTANT",
    "EARTH_MASS",
    "SystemState",
    "SystemStateDeriv",
    "SystemAccFunc",
    "AngularState",
    "AngularStateDeriv",
    "satellite_accel",
    "damped_driven_osc",
    "euler_cromer_system_step",
    "system_equation",
    "gravity_accel",
    "spring_chain_accel",
    "pendulum_deriv",
    "euler_cromer_angular_step",
    "tx_pairs",
    # fields
    "COULOMB_CONSTANT",
    "BIOT_SAVART_CONSTANT",
    "Curve",
    "ScalarField",
    "VectorField",
    "circular_loop",
    "line_segment",
    "line_integral",
    "crossed_line_integral",
    "electric_field_of_line_charge",
    "magnetic_field_of_line_current",
]
