"""Differential equations over state spaces, with pluggable evolution methods.

A *state space* here is any immutable value describing a system completely
enough to evolve it. Each state type has an associated derivative type that
forms a vector space: derivatives add to each other and scale by floats.
States advance through :func:`shift`, which either calls the state's own
``shift`` method or, for plain numbers, falls back to ordinary addition.
Evolution methods (:func:`euler_method`, :func:`rk4_method`) are written
once against this contract and work unchanged for scalar states, single
particles, and the multi-particle and angular states in
:mod:`mechfield.mechanics`.

The independent variable is always time, in seconds.
"""

from __future__ import annotations

from typing import Any, Callable, Iterator, NamedTuple

from .vectors import Vec3

__all__ = [
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
]


class ParticleState(NamedTuple):
    """Time, displacement from the origin, and velocity of one particle."""

    t: float
    r: Vec3
    v: Vec3

    def shift(self, d: "ParticleStateDeriv") -> "ParticleState":
        return ParticleState(self.t + d.dt, self.r + d.dr, self.v + d.dv)


class ParticleStateDeriv(NamedTuple):
    """Rates of change of a :class:`ParticleState`.

    ``dt`` is the (dimensionless) rate of time itself, 1.0 for physical
    evolution. Derivatives form a vector space: they add componentwise and
    scale by floats, which is all the evolution methods need.
    """

    dt: float
    dr: Vec3
    dv: Vec3

    def __add__(self, other: "ParticleStateDeriv") -> "ParticleStateDeriv":  # type: ignore[override]
        return ParticleStateDeriv(self.dt + other.dt, self.dr + other.dr, self.dv + other.dv)

    def __mul__(self, scalar: float) -> "ParticleStateDeriv":  # type: ignore[override]
        return ParticleStateDeriv(self.dt * scalar, self.dr * scalar, self.dv * scalar)

    __rmul__ = __mul__  # type: ignore[assignment]


# An acceleration function encodes Newton's second law for one particle:
# it maps the particle's state to the net-force-per-mass acting on it.
AccelerationFunction = Callable[[ParticleState], Vec3]

# A differential equation maps a state to its derivative; an evolution
# method advances a state through a finite time interval using one.
DifferentialEquation = Callable[[Any], Any]
EvolutionMethod = Callable[[DifferentialEquation, float, Any], Any]


class InitialValueProblem(NamedTuple):
    """A differential equation paired with the state to start from."""

    equation: DifferentialEquation
    initial: Any


def shift(state: Any, delta: Any) -> Any:
    """Advance a state-space point by an element of its derivative space.

    Plain numbers are their own state space, so addition applies; richer
    states provide a ``shift`` method.
    """
    method = getattr(state, "shift", None)
    if method is not None:
        return method(delta)
    return state + delta


def euler_step(accel: AccelerationFunction, dt: float, state: ParticleState) -> ParticleState:
    """One explicit Euler step; the position update uses the old velocity."""
    t, r, v = state
    return ParticleState(t + dt, r + v * dt, v + accel(state) * dt)


def euler_cromer_step(accel: AccelerationFunction, dt: float, state: ParticleState) -> ParticleState:
    """One semi-implicit (Euler-Cromer) step.

    Velocity updates first and the position update uses the *new*
    velocity. This small change keeps the energy error of oscillatory
    systems bounded instead of growing, which is why it is the default
    stepper for the trajectory scenarios.
    """
    t, r, v = state
    v2 = v + accel(state) * dt
    return ParticleState(t + dt, r + v2 * dt, v2)


def particle_equation(accel: AccelerationFunction) -> DifferentialEquation:
    """First-order differential equation for a single particle.

    Time runs at unit rate, displacement changes at the velocity, and
    velocity changes at the acceleration supplied by ``accel``.
    """

    def equation(state: ParticleState) -> ParticleStateDeriv:
        return ParticleStateDeriv(1.0, state.v, accel(state))

    return equation


def euler_method(equation: DifferentialEquation, dt: float, state: Any) -> Any:
    """First-order evolution: shift the state by its derivative times dt."""
    return shift(state, equation(state) * dt)


def rk4_method(equation: DifferentialEquation, dt: float, state: Any) -> Any:
    """Classical fourth-order Runge-Kutta evolution, fixed step.

    Four derivative evaluations combined with weights 1/6, 1/3, 1/3, 1/6.
    Uses only the shift/add/scale contract, so it runs on any state space.
    """
    k1 = equation(state)
    k2 = equation(shift(state, k1 * (dt / 2.0)))
    k3 = equation(shift(state, k2 * (dt / 2.0)))
    k4 = equation(shift(state, k3 * dt))
    return shift(state, (k1 + (k2 + k3) * 2.0 + k4) * (dt / 6.0))


def solution_stream(method: EvolutionMethod, dt: float, problem: InitialValueProblem) -> Iterator[Any]:
    """Unbounded stream of states solving an initial value problem.

    Element 0 is the initial state; each later element applies the
    evolution method to the previous one, computed on demand. Every call
    builds a fresh stream, so consuming twice yields identical elements.
    """
    equation, state = problem
    while True:
        yield state
        state = method(equation, dt, state)


def solve_states(accel: AccelerationFunction, dt: float, initial: ParticleState) -> Iterator[ParticleState]:
    """Euler-Cromer particle trajectory as an unbounded on-demand stream."""
    state = initial
    while True:
        yield state
        state = euler_cromer_step(accel, dt, state)
