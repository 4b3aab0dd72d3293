"""Named, runnable simulation scenarios.

Each scenario bundles what the CLI needs: the kind of state space it
evolves, default timestep and step count, a parameter schema with default
values, and a builder that turns resolved parameters into a concrete run
(initial state, differential equation for the generic methods, dedicated
Euler-Cromer stepper, and the CSV schema for its trajectory).
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import partial
from typing import Any, Callable, Mapping, NamedTuple

from .mechanics import (
    AngularState,
    EARTH_MASS,
    GRAVITATIONAL_CONSTANT,
    SystemState,
    damped_driven_osc,
    euler_cromer_angular_step,
    euler_cromer_system_step,
    gravity_accel,
    pendulum_deriv,
    satellite_accel,
    spring_chain_accel,
    system_equation,
)
from .solver import (
    DifferentialEquation,
    ParticleState,
    euler_cromer_step,
    particle_equation,
)
from .vectors import Vec3, X_HAT, ZERO

__all__ = ["Scenario", "ScenarioRun", "SCENARIOS"]

PARTICLE_HEADER = "t,x,y,z,vx,vy,vz"
ANGULAR_HEADER = "t,theta,omega"


class ScenarioRun(NamedTuple):
    """A scenario instantiated with concrete parameter values."""

    initial: Any
    equation: DifferentialEquation
    cromer_step: Callable[[float, Any], Any]
    header: str
    row: Callable[[Any], tuple[float, ...]]


@dataclass(frozen=True)
class Scenario:
    """Registry entry: defaults plus a builder from parameters to a run."""

    name: str
    description: str
    kind: str  # "particle" | "angular" | "system"
    dt: float
    steps: int
    defaults: Mapping[str, float]
    build: Callable[[Mapping[str, float]], ScenarioRun]


def _particle_row(state: ParticleState) -> tuple[float, ...]:
    return (state.t, state.r.x, state.r.y, state.r.z, state.v.x, state.v.y, state.v.z)


def _particle_run(accel, initial: ParticleState) -> ScenarioRun:
    return ScenarioRun(
        initial=initial,
        equation=particle_equation(accel),
        cromer_step=partial(euler_cromer_step, accel),
        header=PARTICLE_HEADER,
        row=_particle_row,
    )


def _angular_row(state: AngularState) -> tuple[float, ...]:
    return (state.t, state.theta, state.omega)


def _system_header(count: int) -> str:
    columns = ["t"]
    for i in range(1, count + 1):
        columns += [f"x{i}", f"y{i}", f"z{i}", f"vx{i}", f"vy{i}", f"vz{i}"]
    return ",".join(columns)


def _system_row(state: SystemState) -> tuple[float, ...]:
    values = [state.t]
    for r, v in state.particles:
        values += [r.x, r.y, r.z, v.x, v.y, v.z]
    return tuple(values)


def _system_run(accel, initial: SystemState) -> ScenarioRun:
    return ScenarioRun(
        initial=initial,
        equation=system_equation(accel),
        cromer_step=partial(euler_cromer_system_step, accel),
        header=_system_header(len(initial.particles)),
        row=_system_row,
    )


def _build_sho(params: Mapping[str, float]) -> ScenarioRun:
    return _particle_run(
        damped_driven_osc(0.0, 0.0, 0.0),
        ParticleState(0.0, X_HAT, ZERO),
    )


def _build_ddho(params: Mapping[str, float]) -> ScenarioRun:
    return _particle_run(
        damped_driven_osc(params["beta"], params["amp"], params["omega"]),
        ParticleState(0.0, X_HAT, ZERO),
    )


ORBIT_RADIUS = 7e6  # m


def _build_satellite(params: Mapping[str, float]) -> ScenarioRun:
    speed = math.sqrt(GRAVITATIONAL_CONSTANT * EARTH_MASS / ORBIT_RADIUS)
    initial = ParticleState(0.0, Vec3(ORBIT_RADIUS, 0.0, 0.0), Vec3(0.0, speed, 0.0))
    return _particle_run(satellite_accel, initial)


def _build_pendulum(params: Mapping[str, float]) -> ScenarioRun:
    equation = pendulum_deriv(params["g"], params["length"])

    def alpha(state: AngularState) -> float:
        return equation(state).domega

    return ScenarioRun(
        initial=AngularState(0.0, params["theta0"], params["omega0"]),
        equation=equation,
        cromer_step=partial(euler_cromer_angular_step, alpha),
        header=ANGULAR_HEADER,
        row=_angular_row,
    )


# Illustrative Sun-Earth-Moon setup: real masses, circular-orbit seed
# velocities at 1 AU and at the mean lunar distance. Not an ephemeris.
SUN_MASS = 1.989e30  # kg
THREE_BODY_EARTH_MASS = 5.972e24  # kg
MOON_MASS = 7.35e22  # kg
ASTRONOMICAL_UNIT = 1.496e11  # m
LUNAR_DISTANCE = 3.844e8  # m


def _build_three_body(params: Mapping[str, float]) -> ScenarioRun:
    masses = [SUN_MASS, THREE_BODY_EARTH_MASS, MOON_MASS]
    earth_speed = math.sqrt(GRAVITATIONAL_CONSTANT * SUN_MASS / ASTRONOMICAL_UNIT)
    moon_speed = earth_speed + math.sqrt(
        GRAVITATIONAL_CONSTANT * THREE_BODY_EARTH_MASS / LUNAR_DISTANCE
    )
    initial = SystemState(
        0.0,
        (
            (ZERO, ZERO),
            (Vec3(ASTRONOMICAL_UNIT, 0.0, 0.0), Vec3(0.0, earth_speed, 0.0)),
            (Vec3(ASTRONOMICAL_UNIT + LUNAR_DISTANCE, 0.0, 0.0), Vec3(0.0, moon_speed, 0.0)),
        ),
    )
    return _system_run(gravity_accel(masses), initial)


def _build_spring_chain(params: Mapping[str, float]) -> ScenarioRun:
    count = int(params["particles"])
    if count < 1:
        raise ValueError("spring chain needs at least one particle")
    spacing = params["spacing"]
    amplitude = params["amplitude"]
    # transverse pluck along the lowest standing-wave mode
    particles = tuple(
        (
            Vec3(
                (i + 1) * spacing,
                amplitude * math.sin((i + 1) * math.pi / (count + 1)),
                0.0,
            ),
            ZERO,
        )
        for i in range(count)
    )
    accel = spring_chain_accel(params["k"], spacing, params["mass"], fixed_ends=True)
    return _system_run(accel, SystemState(0.0, particles))


SCENARIOS: dict[str, Scenario] = {
    scenario.name: scenario
    for scenario in (
        Scenario(
            name="sho",
            description="simple harmonic oscillator, unit mass and spring constant, released from x = 1 m",
            kind="particle",
            dt=0.01,
            steps=1000,
            defaults={},
            build=_build_sho,
        ),
        Scenario(
            name="ddho",
            description="damped driven harmonic oscillator released from x = 1 m",
            kind="particle",
            dt=0.01,
            steps=1000,
            defaults={"beta": 0.0, "amp": 1.0, "omega": 0.7},
            build=_build_ddho,
        ),
        Scenario(
            name="satellite",
            description="satellite on a circular orbit of radius 7e6 m about a fixed Earth",
            kind="particle",
            dt=1.0,
            steps=5828,
            defaults={},
            build=_build_satellite,
        ),
        Scenario(
            name="pendulum",
            description="pendulum about a fixed pivot, angle and angular velocity state",
            kind="angular",
            dt=0.01,
            steps=1000,
            defaults={"g": 9.8, "length": 1.0, "theta0": 0.2, "omega0": 0.0},
            build=_build_pendulum,
        ),
        Scenario(
            name="three-body",
            description="Sun, Earth, and Moon under mutual gravitation (illustrative seed values)",
            kind="system",
            dt=3600.0,
            steps=8766,
            defaults={},
            build=_build_three_body,
        ),
        Scenario(
            name="spring-chain",
            description="point masses joined by springs between fixed ends, plucked transversely",
            kind="system",
            dt=0.1,
            steps=2000,
            defaults={"particles": 100, "k": 1.0, "spacing": 1.0, "mass": 1.0, "amplitude": 0.1},
            build=_build_spring_chain,
        ),
    )
}
