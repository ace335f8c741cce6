"""Hopf layer: cyclic and circle coordinate Hopf algebras, strong
connections with their three axioms, the associated idempotent recipe,
and the circle-prolongation isomorphism.

The cyclic coaction on the sphere is implemented through the integer
grading (monomial degree mod N) throughout — no numeric roots of unity
ever appear, so all arithmetic stays in the Laurent coefficient ring.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, List, Tuple

from .scalars import Coefficient, ONE, ZERO, p_pow
from .qalgebras import (
    CORE_A,
    SPHERE,
    SPHERE0,
    SphereAlgebra,
    SphereElement,
    SphereMonomial,
    SPHERE_ONE,
)


class CyclicHopfElement:
    """Element of the order-N cyclic group coordinate Hopf algebra; the
    generator ut is unitary with ut^N = 1 (indices reduce mod N)."""

    __slots__ = ("N", "coeffs")

    def __init__(self, N: int, coeffs=None):
        if N < 1:
            raise ValueError("N must be >= 1")
        self.N = N
        vec = [ZERO] * N
        if coeffs is not None:
            if isinstance(coeffs, dict):
                for m, c in coeffs.items():
                    vec[m % N] = vec[m % N] + c
            else:
                for m, c in enumerate(coeffs):
                    vec[m % N] = vec[m % N] + c
        self.coeffs = vec

    @staticmethod
    def generator_power(N: int, m: int) -> "CyclicHopfElement":
        return CyclicHopfElement(N, {m: ONE})

    def __add__(self, other):
        if self.N != other.N:
            raise ValueError("mismatched cyclic orders")
        return CyclicHopfElement(self.N, [a + b for a, b in zip(self.coeffs, other.coeffs)])

    def __mul__(self, other):
        if self.N != other.N:
            raise ValueError("mismatched cyclic orders")
        out: Dict[int, Coefficient] = {}
        for i, a in enumerate(self.coeffs):
            if not a:
                continue
            for j, b in enumerate(other.coeffs):
                if b:
                    k = (i + j) % self.N
                    out[k] = out.get(k, ZERO) + a * b
        return CyclicHopfElement(self.N, out)

    def __eq__(self, other):
        return isinstance(other, CyclicHopfElement) and self.N == other.N and self.coeffs == other.coeffs

    def comultiply(self) -> Dict[Tuple[int, int], Coefficient]:
        return {(m, m): c for m, c in enumerate(self.coeffs) if c}

    def counit(self) -> Coefficient:
        acc = ZERO
        for c in self.coeffs:
            acc = acc + c
        return acc

    def antipode(self) -> "CyclicHopfElement":
        return CyclicHopfElement(self.N, {-m: c for m, c in enumerate(self.coeffs) if c})

    def __str__(self):
        parts = []
        for m, c in enumerate(self.coeffs):
            if not c:
                continue
            name = "1" if m == 0 else ("ut" if m == 1 else f"ut^{m}")
            parts.append(f"({c}) {name}")
        return " + ".join(parts) if parts else "0"


class LaurentHopfElement:
    """Element of the circle coordinate Hopf algebra on the unitary u."""

    __slots__ = ("coeffs",)

    def __init__(self, coeffs: Dict[int, Coefficient] | None = None):
        if coeffs is None:
            coeffs = {}
        self.coeffs = {m: c for m, c in coeffs.items() if c}

    @staticmethod
    def generator_power(m: int) -> "LaurentHopfElement":
        return LaurentHopfElement({m: ONE})

    def __add__(self, other):
        out = dict(self.coeffs)
        for m, c in other.coeffs.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return LaurentHopfElement(out)

    def __mul__(self, other):
        out: Dict[int, Coefficient] = {}
        for i, a in self.coeffs.items():
            for j, b in other.coeffs.items():
                k = i + j
                s = out.get(k, ZERO) + a * b
                if s:
                    out[k] = s
                else:
                    del out[k]
        return LaurentHopfElement(out)

    def __eq__(self, other):
        return isinstance(other, LaurentHopfElement) and self.coeffs == other.coeffs

    def comultiply(self) -> Dict[Tuple[int, int], Coefficient]:
        return {(m, m): c for m, c in self.coeffs.items()}

    def counit(self) -> Coefficient:
        acc = ZERO
        for c in self.coeffs.values():
            acc = acc + c
        return acc

    def antipode(self) -> "LaurentHopfElement":
        return LaurentHopfElement({-m: c for m, c in self.coeffs.items()})

    def __str__(self):
        parts = []
        for m, c in sorted(self.coeffs.items()):
            name = "1" if m == 0 else ("u" if m == 1 else f"u^{m}")
            parts.append(f"({c}) {name}")
        return " + ".join(parts) if parts else "0"


def hopf_ops(h):
    """Comultiplication, counit and antipode (group-like rules, extended
    linearly)."""
    return h.comultiply(), h.counit(), h.antipode()


# ---------------------------------------------------------------------------
# Tensor squares and strong connections
# ---------------------------------------------------------------------------


class TensorSquare:
    """Finite combination of pure tensors of sphere basis monomials."""

    __slots__ = ("alg", "_t")

    def __init__(self, alg: SphereAlgebra, terms=None):
        self.alg = alg
        if terms is None:
            terms = {}
        self._t = {mm: c for mm, c in terms.items() if c}

    @staticmethod
    def of(x: SphereElement, y: SphereElement) -> "TensorSquare":
        out: Dict[Tuple[SphereMonomial, SphereMonomial], Coefficient] = {}
        for m1, c1 in x.terms():
            for m2, c2 in y.terms():
                c = c1 * c2
                if c:
                    out[(m1, m2)] = out.get((m1, m2), ZERO) + c
        return TensorSquare(x.alg, out)

    def terms(self):
        return self._t.items()

    def __bool__(self):
        return bool(self._t)

    def __add__(self, other):
        out = dict(self._t)
        for mm, c in other._t.items():
            s = out.get(mm, ZERO) + c
            if s:
                out[mm] = s
            else:
                out.pop(mm, None)
        return TensorSquare(self.alg, out)

    def __eq__(self, other):
        return isinstance(other, TensorSquare) and self.alg is other.alg and self._t == other._t

    def sandwich(self, inner: "TensorSquare") -> "TensorSquare":
        """Left legs multiply on the left of inner's left legs; right legs
        on the right of inner's right legs."""
        out: Dict[Tuple[SphereMonomial, SphereMonomial], Coefficient] = {}
        for (x, y), c1 in self._t.items():
            for (v, w), c2 in inner._t.items():
                c12 = c1 * c2
                for ml, cl in self.alg.mono_mul(x, v):
                    for mr, cr in self.alg.mono_mul(w, y):
                        c = c12 * cl * cr
                        if not c:
                            continue
                        key = (ml, mr)
                        s = out.get(key, ZERO) + c
                        if s:
                            out[key] = s
                        else:
                            del out[key]
        return TensorSquare(self.alg, out)

    def legs_multiplied_by_class(self, N: int) -> Dict[int, SphereElement]:
        """Multiply the legs of each term, grouped by right-leg degree mod N."""
        acc: Dict[int, Dict[SphereMonomial, Coefficient]] = {}
        for (x, y), c in self._t.items():
            d = (y.mu + y.nu) % N
            bucket = acc.setdefault(d, {})
            for mono, f in self.alg.mono_mul(x, y):
                s = bucket.get(mono, ZERO) + c * f
                if s:
                    bucket[mono] = s
                else:
                    del bucket[mono]
        return {d: SphereElement(self.alg, t) for d, t in acc.items() if t}

    def __str__(self):
        if not self._t:
            return "0"
        from .qalgebras import sphere_mono_str

        parts = []
        for (m1, m2), c in sorted(self._t.items()):
            parts.append(f"({c}) {sphere_mono_str(m1)} (x) {sphere_mono_str(m2)}")
        return " + ".join(parts)


@dataclass
class StrongConnection:
    N: int
    values: List[TensorSquare]
    variant: str

    @property
    def algebra(self) -> SphereAlgebra:
        return self.values[0].alg


def _tensor_one(alg: SphereAlgebra) -> TensorSquare:
    return TensorSquare(alg, {(SPHERE_ONE, SPHERE_ONE): ONE})


def strong_connection_algebraic(N: int, coefficient_variant: str = "corrected") -> StrongConnection:
    """Connection on the generic sphere with values on the cyclic basis.

    The degree-one value is a* (x) a + c * b*A (x) b.  The corrected
    variant takes c = p (forced by the unit-return axiom, since
    a*a + c*b*Ab = 1 - pA + cA); the printed variant keeps c = 1/p and is
    retained for discrepancy reporting.
    """
    if N < 1:
        raise ValueError("N must be >= 1")
    if coefficient_variant not in ("corrected", "printed_p_inverse"):
        raise ValueError(f"unknown variant {coefficient_variant!r}")
    alg = SPHERE
    c = p_pow(1) if coefficient_variant == "corrected" else p_pow(-1)
    values = [_tensor_one(alg)]
    if N > 1:
        ell1 = TensorSquare(
            alg,
            {
                (SphereMonomial(CORE_A, 0, -1, 0), SphereMonomial(CORE_A, 0, 1, 0)): ONE,
                (SphereMonomial(CORE_A, 1, 0, -1), SphereMonomial(CORE_A, 0, 0, 1)): c,
            },
        )
        values.append(ell1)
        for _ in range(2, N):
            values.append(ell1.sandwich(values[-1]))
    return StrongConnection(N=N, values=values, variant=coefficient_variant)


def strong_connection_isometric(N: int) -> StrongConnection:
    """Connection on the parameter-zero sphere: value k is a*^k (x) a^k."""
    if N < 1:
        raise ValueError("N must be >= 1")
    alg = SPHERE0
    values = []
    for k in range(N):
        values.append(
            TensorSquare(
                alg,
                {(SphereMonomial(CORE_A, 0, -k, 0), SphereMonomial(CORE_A, 0, k, 0)): ONE},
            )
        )
    return StrongConnection(N=N, values=values, variant="isometric")


@dataclass
class AxiomCheck:
    n: int
    axiom: str
    ok: bool
    residual: str


def verify_strong_connection(conn: StrongConnection) -> List[AxiomCheck]:
    """Check unitality, the unit-return axiom and both colinearity axioms
    for every cyclic basis element."""
    alg = conn.algebra
    N = conn.N
    out: List[AxiomCheck] = []
    ok0 = conn.values[0] == _tensor_one(alg)
    out.append(AxiomCheck(0, "unitality", ok0, "0" if ok0 else str(conn.values[0])))
    one = alg.one()
    for n, val in enumerate(conn.values):
        classes = val.legs_multiplied_by_class(N)
        bad = []
        for d in sorted(classes):
            expect = one if d == n % N else alg.zero()
            res = classes[d] - expect
            if res:
                bad.append(f"class {d}: {res}")
        if n % N not in classes:
            bad.append(f"class {n % N}: -1")
        out.append(
            AxiomCheck(n, "unit-return", not bad, "0" if not bad else "; ".join(bad))
        )
        left_bad = [
            m1
            for (m1, m2) in dict(val.terms())
            if (m1.mu + m1.nu - (-n)) % N != 0
        ]
        out.append(
            AxiomCheck(
                n,
                "left-colinearity",
                not left_bad,
                "0" if not left_bad else f"offending left degrees {sorted({m.mu + m.nu for m in left_bad})}",
            )
        )
        right_bad = [
            m2 for (m1, m2) in dict(val.terms()) if (m2.mu + m2.nu - n) % N != 0
        ]
        out.append(
            AxiomCheck(
                n,
                "right-colinearity",
                not right_bad,
                "0" if not right_bad else f"offending right degrees {sorted({m.mu + m.nu for m in right_bad})}",
            )
        )
    return out


# ---------------------------------------------------------------------------
# Matrices over the sphere and the associated idempotent
# ---------------------------------------------------------------------------


class SphereMatrix:
    __slots__ = ("rows", "cols", "entries")

    def __init__(self, entries: List[List[SphereElement]]):
        self.rows = len(entries)
        self.cols = len(entries[0]) if entries else 0
        for row in entries:
            if len(row) != self.cols:
                raise ValueError("ragged matrix")
        self.entries = entries

    def __mul__(self, other: "SphereMatrix") -> "SphereMatrix":
        if self.cols != other.rows:
            raise ValueError("shape mismatch")
        out = []
        for i in range(self.rows):
            row = []
            for j in range(other.cols):
                acc = self.entries[0][0].alg.zero()
                for t in range(self.cols):
                    acc = acc + self.entries[i][t] * other.entries[t][j]
                row.append(acc)
            out.append(row)
        return SphereMatrix(out)

    def __sub__(self, other: "SphereMatrix") -> "SphereMatrix":
        if (self.rows, self.cols) != (other.rows, other.cols):
            raise ValueError("shape mismatch")
        return SphereMatrix(
            [
                [self.entries[i][j] - other.entries[i][j] for j in range(self.cols)]
                for i in range(self.rows)
            ]
        )

    def __eq__(self, other):
        return (
            isinstance(other, SphereMatrix)
            and self.rows == other.rows
            and self.cols == other.cols
            and all(
                self.entries[i][j] == other.entries[i][j]
                for i in range(self.rows)
                for j in range(self.cols)
            )
        )

    def __str__(self):
        return "[" + "; ".join(
            ", ".join(str(e) for e in row) for row in self.entries
        ) + "]"


def associated_idempotent(conn: StrongConnection, n: int) -> SphereMatrix:
    """Idempotent for the rank-one module attached to the n-th cyclic basis
    element: with the connection value written as sum_i x_i (x) e_i over
    linearly independent right legs (grouped by right basis monomial,
    ordered descending so the degree-one generator leg comes first), the
    matrix is e_i * x_j."""
    if not (1 <= n <= conn.N - 1):
        raise ValueError("n must satisfy 1 <= n <= N-1")
    alg = conn.algebra
    grouped: Dict[SphereMonomial, Dict[SphereMonomial, Coefficient]] = {}
    for (m1, m2), c in conn.values[n].terms():
        bucket = grouped.setdefault(m2, {})
        bucket[m1] = bucket.get(m1, ZERO) + c
    right_legs = sorted(grouped, reverse=True)
    xs = [SphereElement(alg, grouped[m]) for m in right_legs]
    es = [SphereElement(alg, {m: ONE}) for m in right_legs]
    return SphereMatrix([[e * x for x in xs] for e in es])


@dataclass
class IdempotentCheck:
    idempotent: bool
    invariant: bool
    residuals: List[Tuple[int, int, str]] = field(default_factory=list)


def idempotent_check(E: SphereMatrix, N: int) -> IdempotentCheck:
    if E.rows != E.cols:
        raise ValueError("idempotent check needs a square matrix")
    diff = (E * E) - E
    residuals = []
    for i in range(E.rows):
        for j in range(E.cols):
            if diff.entries[i][j]:
                residuals.append((i, j, str(diff.entries[i][j])))
    invariant = all(
        E.entries[i][j].is_invariant(N) for i in range(E.rows) for j in range(E.cols)
    )
    return IdempotentCheck(idempotent=not residuals, invariant=invariant, residuals=residuals)


# ---------------------------------------------------------------------------
# Circle prolongation
# ---------------------------------------------------------------------------


class ProlongElement:
    """Combination of pure tensors (sphere monomial) (x) u^m.

    The same container represents both the plain tensor product and the
    invariant subalgebra; the maps below convert between the two roles.
    """

    __slots__ = ("alg", "_t")

    def __init__(self, alg: SphereAlgebra = SPHERE, terms=None):
        self.alg = alg
        if terms is None:
            terms = {}
        self._t = {tm: c for tm, c in terms.items() if c}

    @staticmethod
    def of(x: SphereElement, h: LaurentHopfElement) -> "ProlongElement":
        out: Dict[Tuple[SphereMonomial, int], Coefficient] = {}
        for mono, c1 in x.terms():
            for m, c2 in h.coeffs.items():
                c = c1 * c2
                if c:
                    out[(mono, m)] = out.get((mono, m), ZERO) + c
        return ProlongElement(x.alg, out)

    def terms(self):
        return self._t.items()

    def __bool__(self):
        return bool(self._t)

    def __add__(self, other):
        out = dict(self._t)
        for tm, c in other._t.items():
            s = out.get(tm, ZERO) + c
            if s:
                out[tm] = s
            else:
                out.pop(tm, None)
        return ProlongElement(self.alg, out)

    def __sub__(self, other):
        return self + ProlongElement(other.alg, {tm: -c for tm, c in other._t.items()})

    def __mul__(self, other):
        if isinstance(other, (Coefficient, int)):
            return self.scale(other)
        out: Dict[Tuple[SphereMonomial, int], Coefficient] = {}
        for (x1, m1), c1 in self._t.items():
            for (x2, m2), c2 in other._t.items():
                c12 = c1 * c2
                for mono, f in self.alg.mono_mul(x1, x2):
                    key = (mono, m1 + m2)
                    s = out.get(key, ZERO) + c12 * f
                    if s:
                        out[key] = s
                    else:
                        del out[key]
        return ProlongElement(self.alg, out)

    def __rmul__(self, other):
        if isinstance(other, (Coefficient, int)):
            return self.scale(other)
        return NotImplemented

    def scale(self, c: Coefficient | int) -> "ProlongElement":
        if isinstance(c, int):
            c = Coefficient.integer(c)
        if not c:
            return ProlongElement(self.alg)
        return ProlongElement(self.alg, {tm: cm * c for tm, cm in self._t.items()})

    def star(self) -> "ProlongElement":
        out: Dict[Tuple[SphereMonomial, int], Coefficient] = {}
        for (mono, m), c in self._t.items():
            smono, f = self.alg.star_mono(mono)
            if smono is None:
                continue
            key = (smono, -m)
            s = out.get(key, ZERO) + c.conjugate() * f
            if s:
                out[key] = s
            else:
                del out[key]
        return ProlongElement(self.alg, out)

    def pow_signed(self, e: int) -> "ProlongElement":
        if e < 0:
            return self.star().pow_signed(-e)
        acc = ProlongElement(self.alg, {(SPHERE_ONE, 0): ONE})
        for _ in range(e):
            acc = acc * self
        return acc

    def __eq__(self, other):
        return (
            isinstance(other, ProlongElement)
            and self.alg is other.alg
            and self._t == other._t
        )

    def __str__(self):
        # the circle leg is central, so tensors print as plain products
        if not self._t:
            return "0"
        from .qalgebras import sphere_mono_str

        out = []
        for (mono, m), coeff in sorted(self._t.items()):
            body = sphere_mono_str(mono)
            upart = "" if m == 0 else ("u" if m == 1 else f"u^{m}")
            if body == "1":
                body = upart or "1"
            elif upart:
                body = f"{body} {upart}"
            for sign, cbody in coeff.term_strings():
                piece = cbody if body == "1" else (body if cbody == "1" else f"{cbody} {body}")
                if not out:
                    out.append(("-" if sign < 0 else "") + piece)
                else:
                    out.append(("- " if sign < 0 else "+ ") + piece)
        return " ".join(out)


def prolong_phi(x: SphereElement, h: LaurentHopfElement, N: int) -> ProlongElement:
    """x (x) u^m  ->  x (x) u^(deg x + N m), term by term."""
    if N < 1:
        raise ValueError("N must be >= 1")
    out: Dict[Tuple[SphereMonomial, int], Coefficient] = {}
    for mono, c1 in x.terms():
        d = mono.mu + mono.nu
        for m, c2 in h.coeffs.items():
            c = c1 * c2
            if c:
                key = (mono, d + N * m)
                out[key] = out.get(key, ZERO) + c
    return ProlongElement(x.alg, out)


def prolong_phi_map(t: ProlongElement, N: int) -> ProlongElement:
    """prolong_phi applied to an element already in tensor form."""
    out = ProlongElement(t.alg)
    acc: Dict[Tuple[SphereMonomial, int], Coefficient] = {}
    for (mono, m), c in t.terms():
        d = mono.mu + mono.nu
        key = (mono, d + N * m)
        acc[key] = acc.get(key, ZERO) + c
    return ProlongElement(t.alg, acc)


def prolong_phi_inv(t: ProlongElement, N: int) -> ProlongElement:
    """Exact inverse: (x, m) -> (x, (m - deg x)/N); domain error off the
    invariant subalgebra."""
    if N < 1:
        raise ValueError("N must be >= 1")
    out: Dict[Tuple[SphereMonomial, int], Coefficient] = {}
    for (mono, m), c in t.terms():
        d = mono.mu + mono.nu
        if (m - d) % N != 0:
            raise ValueError(
                f"term of tensor degree {m} over monomial degree {d} is not invariant mod {N}"
            )
        key = (mono, (m - d) // N)
        out[key] = out.get(key, ZERO) + c
    return ProlongElement(t.alg, out)


def prolong_action(t: ProlongElement, N: int) -> Dict[int, ProlongElement]:
    """Spectral decomposition of the cyclic action: terms grouped by the
    weight (deg x - m) mod N.  The generator acts on the weight-w part by
    the w-th power of the cyclic phase, so the decomposition determines
    the action; only the weight data is ever needed."""
    if N < 1:
        raise ValueError("N must be >= 1")
    buckets: Dict[int, Dict[Tuple[SphereMonomial, int], Coefficient]] = {}
    for (mono, m), c in t.terms():
        w = (mono.mu + mono.nu - m) % N
        buckets.setdefault(w, {})[(mono, m)] = c
    return {w: ProlongElement(t.alg, b) for w, b in buckets.items()}


def prolong_is_invariant(t: ProlongElement, N: int) -> bool:
    return set(prolong_action(t, N)) <= {0}


def prolong_project(t: ProlongElement, N: int) -> ProlongElement:
    """Orbit average: the weight-zero part."""
    return prolong_action(t, N).get(0, ProlongElement(t.alg))
