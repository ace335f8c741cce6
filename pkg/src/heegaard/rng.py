"""A small, named, portable pseudo-random generator (SplitMix64) plus the
element samplers used by the randomized suites.

The generator's output is pinned by its algorithm alone, so identical
seeds give identical suites on any platform or interpreter version.
"""

from __future__ import annotations

from .scalars import Coefficient
from .qalgebras import CORE_A, CORE_B, SphereAlgebra, SphereElement, SphereMonomial

_MASK = (1 << 64) - 1

DEFAULT_SEED = 24195


class SplitMix64:
    __slots__ = ("state",)

    def __init__(self, seed: int = DEFAULT_SEED):
        self.state = seed & _MASK

    def next64(self) -> int:
        self.state = (self.state + 0x9E3779B97F4A7C15) & _MASK
        z = self.state
        z = ((z ^ (z >> 30)) * 0xBF58476D1CE4E5B9) & _MASK
        z = ((z ^ (z >> 27)) * 0x94D049BB133111EB) & _MASK
        return z ^ (z >> 31)

    def randint(self, lo: int, hi: int) -> int:
        """Uniform-ish integer in [lo, hi]; the tiny modulo bias is harmless
        for test sampling."""
        if hi < lo:
            raise ValueError("empty range")
        return lo + self.next64() % (hi - lo + 1)

    def choice(self, seq):
        return seq[self.randint(0, len(seq) - 1)]


def random_coefficient(rng: SplitMix64, max_exp: int = 2) -> Coefficient:
    n = 0
    while n == 0:
        n = rng.randint(-3, 3)
    return Coefficient.monomial(
        n,
        rng.randint(-max_exp, max_exp),
        rng.randint(-max_exp, max_exp),
        rng.randint(-max_exp, max_exp),
    )


def random_sphere_monomial(rng: SplitMix64, kmax: int = 4, emax: int = 5) -> SphereMonomial:
    k = rng.randint(0, kmax)
    core = CORE_A if k == 0 else rng.choice((CORE_A, CORE_B))
    return SphereMonomial(core, k, rng.randint(-emax, emax), rng.randint(-emax, emax))


def random_sphere_element(
    rng: SplitMix64,
    alg: SphereAlgebra,
    terms: int = 2,
    kmax: int = 4,
    emax: int = 5,
) -> SphereElement:
    out = alg.zero()
    for _ in range(terms):
        mono = random_sphere_monomial(rng, kmax, emax)
        out = out + SphereElement(alg, {mono: random_coefficient(rng)})
    return out
