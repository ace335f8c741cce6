"""Normal-form arithmetic for the quantum disc and the Heegaard quantum sphere.

Disc elements live in the span of X^k x^mu (X := 1 - x x*, negative mu
meaning adjoint powers); sphere elements in the span of A^k a^mu b^nu and
B^k a^mu b^nu with k >= 1 for the B family.  Elements are kept in normal
form at all times, so equality is dictionary comparison.

Each algebra object owns its memo tables (monomial interning, monomial
products, generator powers).  Values are immutable and the caches are
append-only, so everything can be shared freely between threads.

Setting ``isometric=True`` instantiates the parameter-at-zero presentation:
the same contraction rules run, every emitted coefficient is evaluated at
parameter zero (a negative parameter power is a hard error — it flags a
product leaving the normal-form span), and the extra relations of that
specialization (core powers idempotent, core annihilating positive
generator powers on its right) are applied at the monomial level.
"""

from __future__ import annotations

from typing import Dict, NamedTuple, Tuple

from .scalars import (
    Base,
    Coefficient,
    ONE,
    ZERO,
    qpoly_Qpair_base,
    var_pow,
    w_pow,
)

CORE_A = 0
CORE_B = 1


class UnknownRelationError(ValueError):
    """Raised for an unrecognized relation identifier."""


class DiscMonomial(NamedTuple):
    k: int
    mu: int


class SphereMonomial(NamedTuple):
    core: int
    k: int
    mu: int
    nu: int


DISC_ONE = DiscMonomial(0, 0)
SPHERE_ONE = SphereMonomial(CORE_A, 0, 0, 0)


def _mono_str(pairs) -> str:
    parts = []
    for name, e in pairs:
        if e == 0:
            continue
        parts.append(name if e == 1 else f"{name}^{e}")
    return " ".join(parts) if parts else "1"


def disc_mono_str(m: DiscMonomial) -> str:
    return _mono_str((("X", m.k), ("x", m.mu)))


def sphere_mono_str(m: SphereMonomial) -> str:
    core = "A" if m.core == CORE_A else "B"
    return _mono_str(((core, m.k), ("a", m.mu), ("b", m.nu)))


def _element_str(terms, mono_str) -> str:
    if not terms:
        return "0"
    out = []
    for mono, coeff in sorted(terms.items()):
        ms = mono_str(mono)
        for sign, body in coeff.term_strings():
            if ms == "1":
                piece = body
            elif body == "1":
                piece = ms
            else:
                piece = f"{body} {ms}"
            if not out:
                out.append(("-" if sign < 0 else "") + piece)
            else:
                out.append(("- " if sign < 0 else "+ ") + piece)
    return " ".join(out)


class _EngineBase:
    """Shared memoization plumbing for the two normal-form engines."""

    def __init__(self):
        self._mul_memo: Dict[Tuple, Tuple] = {}
        self._intern: Dict[Tuple, Tuple] = {}

    def intern(self, mono):
        return self._intern.setdefault(mono, mono)


# ---------------------------------------------------------------------------
# Quantum disc
# ---------------------------------------------------------------------------


class DiscAlgebra(_EngineBase):
    """The one-generator disc algebra at parameter var^sign (or at zero).

    var in {'p','q'}; sign -1 selects the inverse-parameter presentation
    used as the target of the mirror isomorphism.
    """

    def __init__(self, var: str = "p", sign: int = 1, isometric: bool = False):
        super().__init__()
        if isometric and sign != 1:
            raise ValueError("the parameter-at-zero presentation uses sign +1")
        self.var = var
        self.sign = sign
        self.isometric = isometric
        self.base: Base = (var, sign)

    # parameter powers as coefficients
    def param_pow(self, e: int) -> Coefficient:
        return var_pow(self.var, self.sign * e)

    def _post_coeff(self, c: Coefficient) -> Coefficient:
        if self.isometric:
            return c.eval_at_zero(self.var)
        return c

    def _reduce_mono(self, m: DiscMonomial) -> DiscMonomial | None:
        if not self.isometric or m.k == 0:
            return m
        if m.mu > 0:
            return None
        if m.k > 1:
            return DiscMonomial(1, m.mu)
        return m

    def mono_mul(self, m1: DiscMonomial, m2: DiscMonomial):
        key = (m1, m2)
        got = self._mul_memo.get(key)
        if got is not None:
            return got
        k1, mu1 = m1
        k2, mu2 = m2
        factor = self.param_pow(-mu1 * k2) if k2 else ONE
        cont = qpoly_Qpair_base(mu1, mu2, self.base)
        out = []
        mu = mu1 + mu2
        emitted: Dict[DiscMonomial, Coefficient] = {DiscMonomial(k1 + k2, mu): factor}
        for deg, c in cont.items():
            mono = DiscMonomial(k1 + k2 + deg, mu)
            emitted[mono] = emitted.get(mono, ZERO) + factor * c
        for mono, c in emitted.items():
            # evaluate first: a negative parameter power flags a product
            # escaping the normal-form span and must not be masked by a
            # vanishing word
            c = self._post_coeff(c)
            if not c:
                continue
            red = self._reduce_mono(mono)
            if red is None:
                continue
            out.append((self.intern(red), c))
        got = tuple(out)
        self._mul_memo[key] = got
        return got

    def star_mono(self, m: DiscMonomial) -> Tuple[DiscMonomial | None, Coefficient]:
        f = self._post_coeff(self.param_pow(m.k * m.mu))
        if not f:
            return None, ZERO
        red = self._reduce_mono(DiscMonomial(m.k, -m.mu))
        if red is None:
            return None, ZERO
        return self.intern(red), f

    # -- element constructors ------------------------------------------

    def element(self, terms=None) -> "DiscElement":
        return DiscElement(self, terms)

    def zero(self) -> "DiscElement":
        return DiscElement(self)

    def one(self) -> "DiscElement":
        return DiscElement(self, {DISC_ONE: ONE})

    def scalar(self, c: Coefficient) -> "DiscElement":
        return DiscElement(self, {DISC_ONE: c})

    def x(self, e: int = 1) -> "DiscElement":
        return DiscElement(self, {DiscMonomial(0, e): ONE})

    def X(self, e: int = 1) -> "DiscElement":
        return DiscElement(self, {DiscMonomial(e, 0): ONE})

    def monomial(self, k: int, mu: int, coeff: Coefficient = ONE) -> "DiscElement":
        return DiscElement(self, {DiscMonomial(k, mu): coeff})


class DiscElement:
    __slots__ = ("alg", "_t")

    def __init__(self, alg: DiscAlgebra, terms: Dict[DiscMonomial, Coefficient] | None = None):
        self.alg = alg
        if terms is None:
            terms = {}
        self._t = {m: c for m, c in terms.items() if c}

    def terms(self):
        return self._t.items()

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def _check(self, other):
        if other.alg is not self.alg:
            raise ValueError("elements belong to different disc algebras")

    def __add__(self, other: "DiscElement") -> "DiscElement":
        self._check(other)
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return DiscElement(self.alg, out)

    def __neg__(self):
        return DiscElement(self.alg, {m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Coefficient | int) -> "DiscElement":
        if isinstance(c, int):
            c = Coefficient.integer(c)
        if not c:
            return DiscElement(self.alg)
        return DiscElement(self.alg, {m: cm * c for m, cm in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (Coefficient, int)):
            return self.scale(other)
        self._check(other)
        out: Dict[DiscMonomial, Coefficient] = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                c12 = c1 * c2
                for mono, c in self.alg.mono_mul(m1, m2):
                    s = out.get(mono, ZERO) + c12 * c
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
        return DiscElement(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (Coefficient, int)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "DiscElement":
        out: Dict[DiscMonomial, Coefficient] = {}
        for m, c in self._t.items():
            mono, f = self.alg.star_mono(m)
            if mono is None:
                continue
            s = out.get(mono, ZERO) + c.conjugate() * f
            if s:
                out[mono] = s
            else:
                del out[mono]
        return DiscElement(self.alg, out)

    def pow_signed(self, e: int) -> "DiscElement":
        """e >= 0: ordinary power; e < 0: power of the adjoint."""
        if e < 0:
            return self.star().pow_signed(-e)
        acc = self.alg.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        if not isinstance(other, DiscElement):
            return NotImplemented
        return self.alg is other.alg and self._t == other._t

    def __str__(self):
        return _element_str(self._t, disc_mono_str)

    def __repr__(self):
        return f"DiscElement({self})"


DISC = DiscAlgebra("p")
DISC_INV = DiscAlgebra("p", sign=-1)
DISC0 = DiscAlgebra("p", isometric=True)


def disc_mul(r: DiscElement, s: DiscElement) -> DiscElement:
    return r * s


def disc_star(r: DiscElement) -> DiscElement:
    return r.star()


def kappa_iso(r: DiscElement) -> DiscElement:
    """Mirror isomorphism into the inverse-parameter disc: x -> x_-*.

    Images are computed by multiplying generator images in the target
    engine, never by substituting printed formulas.
    """
    if r.alg is not DISC:
        raise ValueError("kappa_iso is defined on the parameter-p disc")
    target = DISC_INV
    kx = target.x().star()
    kX = target.one() - kx * kx.star()
    out = target.zero()
    powX: Dict[int, DiscElement] = {0: target.one()}
    for m, c in sorted(r.terms()):
        k, mu = m
        if k not in powX:
            acc = powX[max(powX)]
            for _ in range(max(powX), k):
                acc = acc * kX
                powX[max(powX) + 1] = acc
        out = out + (powX[k] * kx.pow_signed(mu)).scale(c)
    return out


# ---------------------------------------------------------------------------
# Heegaard quantum sphere
# ---------------------------------------------------------------------------


class SphereAlgebra(_EngineBase):
    def __init__(self, isometric: bool = False):
        super().__init__()
        self.isometric = isometric
        self.base_a: Base = ("p", 1)
        self.base_b: Base = ("q", 1)

    def _post_coeff(self, c: Coefficient) -> Coefficient:
        if self.isometric:
            return c.eval_at_zero("p").eval_at_zero("q")
        return c

    def _reduce_mono(self, m: SphereMonomial) -> SphereMonomial | None:
        if not self.isometric or m.k == 0:
            return m
        if m.core == CORE_A and m.mu > 0:
            return None
        if m.core == CORE_B and m.nu > 0:
            return None
        if m.k > 1:
            return SphereMonomial(m.core, 1, m.mu, m.nu)
        return m

    def mono_mul(self, m1: SphereMonomial, m2: SphereMonomial):
        key = (m1, m2)
        got = self._mul_memo.get(key)
        if got is not None:
            return got
        core1, k1, mu1, nu1 = m1
        core2, k2, mu2, nu2 = m2
        # (1) commute the right factor's core to the left
        factor = ONE
        if k2:
            if core2 == CORE_A:
                if mu1:
                    factor = factor * var_pow("p", -mu1 * k2)
            else:
                if nu1:
                    factor = factor * var_pow("q", -nu1 * k2)
        # (2) merge cores; mixed cores annihilate
        if k1 and k2 and core1 != core2:
            self._mul_memo[key] = ()
            return ()
        if k1:
            core, k = core1, k1 + (k2 if core1 == core2 else 0)
        else:
            core, k = (core2, k2) if k2 else (CORE_A, 0)
        # (3) first factor's b-powers cross the second's a-powers
        if nu1 and mu2:
            factor = factor * w_pow(-2 * nu1 * mu2)
        # (4) contract generator powers
        cont_a = qpoly_Qpair_base(mu1, mu2, self.base_a)
        cont_b = qpoly_Qpair_base(nu1, nu2, self.base_b)
        mu = mu1 + mu2
        nu = nu1 + nu2
        # (5) merge produced core powers (mixed products annihilate) and emit
        emitted: Dict[SphereMonomial, Coefficient] = {
            SphereMonomial(core, k, mu, nu): factor
        }

        def _emit(mono: SphereMonomial, c: Coefficient):
            s = emitted.get(mono, ZERO) + c
            if s:
                emitted[mono] = s
            else:
                del emitted[mono]

        for deg, c in cont_a.items():
            if k and core == CORE_B:
                continue
            _emit(SphereMonomial(CORE_A, k + deg, mu, nu), factor * c)
        for deg, c in cont_b.items():
            if k and core == CORE_A:
                continue
            _emit(SphereMonomial(CORE_B, k + deg, mu, nu), factor * c)
        out = []
        for mono, c in emitted.items():
            # evaluate first: escapes from the span must raise, not vanish
            c = self._post_coeff(c)
            if not c:
                continue
            red = self._reduce_mono(mono)
            if red is None:
                continue
            out.append((self.intern(red), c))
        got = tuple(out)
        self._mul_memo[key] = got
        return got

    def star_mono(self, m: SphereMonomial) -> Tuple[SphereMonomial | None, Coefficient]:
        if m.core == CORE_A:
            f = var_pow("p", m.k * m.mu) if m.k and m.mu else ONE
        else:
            f = var_pow("q", m.k * m.nu) if m.k and m.nu else ONE
        if m.mu and m.nu:
            f = f * w_pow(-2 * m.mu * m.nu)
        f = self._post_coeff(f)
        if not f:
            return None, ZERO
        red = self._reduce_mono(SphereMonomial(m.core, m.k, -m.mu, -m.nu))
        if red is None:
            return None, ZERO
        return self.intern(red), f

    # -- element constructors ------------------------------------------

    def element(self, terms=None) -> "SphereElement":
        return SphereElement(self, terms)

    def zero(self) -> "SphereElement":
        return SphereElement(self)

    def one(self) -> "SphereElement":
        return SphereElement(self, {SPHERE_ONE: ONE})

    def scalar(self, c: Coefficient | int) -> "SphereElement":
        if isinstance(c, int):
            c = Coefficient.integer(c)
        return SphereElement(self, {SPHERE_ONE: c})

    def a(self, e: int = 1) -> "SphereElement":
        return SphereElement(self, {SphereMonomial(CORE_A, 0, e, 0): ONE})

    def b(self, e: int = 1) -> "SphereElement":
        return SphereElement(self, {SphereMonomial(CORE_A, 0, 0, e): ONE})

    def A(self, e: int = 1) -> "SphereElement":
        return SphereElement(self, {SphereMonomial(CORE_A, e, 0, 0): ONE})

    def B(self, e: int = 1) -> "SphereElement":
        return SphereElement(self, {SphereMonomial(CORE_B, e, 0, 0): ONE})

    def z(self) -> "SphereElement":
        return SphereElement(self, {SphereMonomial(CORE_A, 0, 1, -1): ONE})

    def monomial(self, core: int, k: int, mu: int, nu: int, coeff: Coefficient = ONE):
        if core == CORE_B and k < 1:
            raise ValueError("B-core monomials need k >= 1")
        return SphereElement(self, {SphereMonomial(core, k, mu, nu): coeff})


class SphereElement:
    __slots__ = ("alg", "_t")

    def __init__(self, alg: SphereAlgebra, terms: Dict[SphereMonomial, Coefficient] | None = None):
        self.alg = alg
        if terms is None:
            terms = {}
        self._t = {m: c for m, c in terms.items() if c}

    def terms(self):
        return self._t.items()

    def sorted_terms(self):
        return sorted(self._t.items())

    def __bool__(self):
        return bool(self._t)

    def is_zero(self):
        return not self._t

    def _check(self, other):
        if other.alg is not self.alg:
            raise ValueError("elements belong to different sphere algebras")

    def __add__(self, other: "SphereElement") -> "SphereElement":
        self._check(other)
        out = dict(self._t)
        for m, c in other._t.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return SphereElement(self.alg, out)

    def __neg__(self):
        return SphereElement(self.alg, {m: -c for m, c in self._t.items()})

    def __sub__(self, other):
        return self + (-other)

    def scale(self, c: Coefficient | int) -> "SphereElement":
        if isinstance(c, int):
            c = Coefficient.integer(c)
        if not c:
            return SphereElement(self.alg)
        return SphereElement(self.alg, {m: cm * c for m, cm in self._t.items()})

    def __mul__(self, other):
        if isinstance(other, (Coefficient, int)):
            return self.scale(other)
        self._check(other)
        out: Dict[SphereMonomial, Coefficient] = {}
        for m1, c1 in self._t.items():
            for m2, c2 in other._t.items():
                c12 = c1 * c2
                for mono, c in self.alg.mono_mul(m1, m2):
                    s = out.get(mono, ZERO) + c12 * c
                    if s:
                        out[mono] = s
                    else:
                        del out[mono]
        return SphereElement(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (Coefficient, int)):
            return self.scale(other)
        return NotImplemented

    def star(self) -> "SphereElement":
        out: Dict[SphereMonomial, Coefficient] = {}
        for m, c in self._t.items():
            mono, f = self.alg.star_mono(m)
            if mono is None:
                continue
            s = out.get(mono, ZERO) + c.conjugate() * f
            if s:
                out[mono] = s
            else:
                del out[mono]
        return SphereElement(self.alg, out)

    def pow_signed(self, e: int) -> "SphereElement":
        if e < 0:
            return self.star().pow_signed(-e)
        acc = self.alg.one()
        for _ in range(e):
            acc = acc * self
        return acc

    def degree_support(self) -> set:
        return {m.mu + m.nu for m in self._t}

    def is_invariant(self, n: int) -> bool:
        if n < 1:
            raise ValueError("the cyclic order must be >= 1")
        return all(d % n == 0 for d in self.degree_support())

    def __eq__(self, other):
        if not isinstance(other, SphereElement):
            return NotImplemented
        return self.alg is other.alg and self._t == other._t

    def __str__(self):
        return _element_str(self._t, sphere_mono_str)

    def __repr__(self):
        return f"SphereElement({self})"


SPHERE = SphereAlgebra()
SPHERE0 = SphereAlgebra(isometric=True)


def sphere_mul(r: SphereElement, s: SphereElement) -> SphereElement:
    return r * s


def sphere_star(r: SphereElement) -> SphereElement:
    return r.star()


def degree_support(r: SphereElement) -> set:
    return r.degree_support()


def is_invariant(r: SphereElement, n: int) -> bool:
    return r.is_invariant(n)


# ---------------------------------------------------------------------------
# Relation residuals: left side minus right side of the named identity,
# computed inside the engine.  The suite passes iff every residual is zero.
# ---------------------------------------------------------------------------


def _res_heegard_ab(alg):
    a, b = alg.a(), alg.b()
    return a * b - (b * a).scale(w_pow(2))


def _res_heegard_abstar(alg):
    a, bs = alg.a(), alg.b().star()
    return a * bs - (bs * a).scale(w_pow(-2))


def _res_heegard_aa(alg):
    a = alg.a()
    return a.star() * a - (a * a.star()).scale(var_pow("p", 1)) - alg.scalar(ONE - var_pow("p", 1))


def _res_heegard_bb(alg):
    b = alg.b()
    return b.star() * b - (b * b.star()).scale(var_pow("q", 1)) - alg.scalar(ONE - var_pow("q", 1))


def _res_heegard_AB(alg):
    a, b, one = alg.a(), alg.b(), alg.one()
    return (one - a * a.star()) * (one - b * b.star())


def _res_core(alg, which):
    a, b, A, B = alg.a(), alg.b(), alg.A(), alg.B()
    if which == "Aa":
        return A * a - (a * A).scale(var_pow("p", 1))
    if which == "Ab":
        return A * b - b * A
    if which == "Ba":
        return B * a - a * B
    if which == "Bb":
        return B * b - (b * B).scale(var_pow("q", 1))
    if which == "Astar":
        return A.star() - A
    if which == "Bstar":
        return B.star() - B
    raise UnknownRelationError(which)


def _res_aaminus(alg, n: int):
    a = alg.a()
    lhs = a * a.pow_signed(-n) - a.pow_signed(-n) * a
    rhs = (alg.A() * a.pow_signed(-(n - 1))).scale(var_pow("p", n) - ONE)
    return lhs - rhs


def _res_chlemma(alg, pair: str, mu: int):
    """x^mu y^mu against the phase-corrected (xy)^mu for a pair commuting
    up to a fixed phase."""
    a, b = alg.a(), alg.b()
    if pair == "ab":
        x, y, phase_exp = a, b, 2  # x y = w^2 y x
    elif pair == "abstar":
        x, y, phase_exp = a, b.star(), -2
    else:
        raise UnknownRelationError(f"chlemma:{pair}")
    lhs = x.pow_signed(mu) * y.pow_signed(mu)
    rhs = ((x * y).pow_signed(mu)).scale(w_pow(phase_exp * (mu * (mu - 1) // 2)))
    return lhs - rhs


def relation_residual(rid: str, alg: SphereAlgebra = None, **params) -> SphereElement:
    """Normal form of LHS - RHS for the named displayed identity."""
    if alg is None:
        alg = SPHERE
    if rid == "heegard:ab":
        return _res_heegard_ab(alg)
    if rid == "heegard:abstar":
        return _res_heegard_abstar(alg)
    if rid == "heegard:aa":
        return _res_heegard_aa(alg)
    if rid == "heegard:bb":
        return _res_heegard_bb(alg)
    if rid == "heegard:AB":
        return _res_heegard_AB(alg)
    if rid.startswith("core:"):
        return _res_core(alg, rid.split(":", 1)[1])
    if rid == "aaminus":
        return _res_aaminus(alg, params["n"])
    if rid.startswith("chlemma:"):
        return _res_chlemma(alg, rid.split(":", 1)[1], params["mu"])
    raise UnknownRelationError(rid)
