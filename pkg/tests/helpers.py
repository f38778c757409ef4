"""Shared test utilities: ulp comparison and random admissible families."""

import math
import random

from minksurf import jets
from minksurf.jets import Jet2
from minksurf.meridian import (ParabolicFamily, ProfileCurvePhi, ProfilePair,
                               RootBranch, plane_section_phi)
from minksurf.surface import Interval


def ulps_apart(a: float, b: float) -> float:
    """|a - b| measured in units in the last place of the larger magnitude."""
    if a == b:
        return 0.0
    scale = math.ulp(max(abs(a), abs(b), math.ulp(0.0)))
    return abs(a - b) / scale


def assert_ulps(a: float, b: float, limit: float, label: str = ""):
    d = ulps_apart(a, b)
    assert d <= limit, f"{label}: {a!r} vs {b!r} differ by {d:.1f} ulp > {limit}"


def rel_err(a: float, b: float, floor: float = 1.0) -> float:
    return abs(a - b) / max(abs(b), floor)


def linear_profile_pair(a0: float, a1: float, c1: float, c3: float,
                        domain: Interval) -> ProfilePair:
    """f = a0 + a1 u, g chosen so that -f' g' = |a1| (c1 + c3 u^2) > 0."""
    sgn = math.copysign(1.0, a1)

    def g(ju: Jet2) -> Jet2:
        return -sgn * (c1 * ju + (c3 / 3.0) * ju * ju * ju)

    return ProfilePair(f=lambda ju: a0 + a1 * ju, g=g, domain=domain)


def random_parabolic_family(rng: random.Random) -> ParabolicFamily:
    """A randomized admissible (f, g, phi) triple on a fixed box."""
    u_dom = Interval(0.4, 1.6)
    a1 = rng.choice([1.0, -1.0]) * rng.uniform(0.5, 1.5)
    a0 = rng.uniform(0.3, 1.0) + max(0.0, -a1) * u_dom.hi
    c1 = rng.uniform(0.3, 1.2)
    c3 = rng.uniform(0.0, 1.0)
    fp = linear_profile_pair(a0, a1, c1, c3, u_dom)

    kind = rng.randrange(3)
    if kind == 0:
        base = rng.uniform(1.0, 2.5)
        amp = rng.uniform(0.0, base - 0.4)
        ph = rng.uniform(0.0, 2.0 * math.pi)
        phi = ProfileCurvePhi(
            phi=lambda jv, b=base, a=amp, p=ph: b + a * jets.sin(jv + p),
            domain=Interval(0.1, 6.0))
    elif kind == 1:
        lam = rng.uniform(-0.4, 0.4)
        scale = rng.uniform(0.7, 1.8)
        phi = ProfileCurvePhi(
            phi=lambda jv, l=lam, s=scale: s * jets.exp(l * jets.sin(jv)),
            domain=Interval(0.1, 6.0))
    else:
        a = rng.uniform(-1.5, 1.5)
        b = rng.uniform(-1.5, 1.5)
        c = rng.uniform(-2.0, -0.3)
        branch = rng.choice([RootBranch.PLUS, RootBranch.MINUS])
        phi = plane_section_phi(a, b, c, branch)
    label = f"random family #{kind}"
    return ParabolicFamily(fp, phi, label)
