"""Exact scalar arithmetic in the Laurent ring Z[p^±1, q^±1, w^±1].

``w`` is a formal phase unit (w^m stands for the phase exp(i*m*pi*theta)
with theta irrational, so distinct powers of w never collapse).  All
integers are arbitrary precision; there is no floating point anywhere.

The module also provides the deformed integer/binomial families and the
one-variable contraction polynomials that drive every normal-form rule
downstream.  Everything here is immutable and pure, hence thread-safe;
the memo caches are append-only dicts guarded by the GIL.
"""

from __future__ import annotations

from typing import Dict, Iterator, Tuple

Triple = Tuple[int, int, int]

_VAR_INDEX = {"p": 0, "q": 1, "w": 2}


class EvaluationError(ValueError):
    """Raised when a localized variable is evaluated where it is undefined."""


def _check_var(var: str) -> int:
    if var not in ("p", "q"):
        raise ValueError(f"var must be 'p' or 'q', got {var!r}")
    return _VAR_INDEX[var]


class Coefficient:
    """A sparse Laurent polynomial: map (i, j, k) -> integer for p^i q^j w^k.

    Instances are immutable; all operations return fresh values.  Equality
    is termwise; no stored integer is zero.
    """

    __slots__ = ("_terms", "_hash")

    def __init__(self, terms: Dict[Triple, int] | None = None, _trusted: bool = False):
        if terms is None:
            terms = {}
        if not _trusted:
            terms = {e: c for e, c in terms.items() if c}
        self._terms = terms
        self._hash: int | None = None

    # -- constructors ------------------------------------------------

    @staticmethod
    def integer(n: int) -> "Coefficient":
        return Coefficient({(0, 0, 0): n} if n else {}, _trusted=True)

    @staticmethod
    def monomial(n: int = 1, i: int = 0, j: int = 0, k: int = 0) -> "Coefficient":
        return Coefficient({(i, j, k): n} if n else {}, _trusted=True)

    # -- ring structure ----------------------------------------------

    def __add__(self, other: "Coefficient") -> "Coefficient":
        if not isinstance(other, Coefficient):
            return NotImplemented
        out = dict(self._terms)
        for e, c in other._terms.items():
            s = out.get(e, 0) + c
            if s:
                out[e] = s
            else:
                out.pop(e, None)
        return Coefficient(out, _trusted=True)

    def __neg__(self) -> "Coefficient":
        return Coefficient({e: -c for e, c in self._terms.items()}, _trusted=True)

    def __sub__(self, other: "Coefficient") -> "Coefficient":
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, int):
            if other == 0:
                return ZERO
            return Coefficient({e: c * other for e, c in self._terms.items()}, _trusted=True)
        if not isinstance(other, Coefficient):
            return NotImplemented
        if len(other._terms) == 1:
            ((oi, oj, ok), oc), = other._terms.items()
            return Coefficient(
                {(i + oi, j + oj, k + ok): c * oc for (i, j, k), c in self._terms.items()},
                _trusted=True,
            )
        out: Dict[Triple, int] = {}
        for (i1, j1, k1), c1 in self._terms.items():
            for (i2, j2, k2), c2 in other._terms.items():
                e = (i1 + i2, j1 + j2, k1 + k2)
                s = out.get(e, 0) + c1 * c2
                if s:
                    out[e] = s
                else:
                    del out[e]
        return Coefficient(out, _trusted=True)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if isinstance(other, int):
            return self._terms == ({(0, 0, 0): other} if other else {})
        if not isinstance(other, Coefficient):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        if self._hash is None:
            self._hash = hash(frozenset(self._terms.items()))
        return self._hash

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_zero(self) -> bool:
        return not self._terms

    # -- star structure and localization -----------------------------

    def conjugate(self) -> "Coefficient":
        """p and q are fixed (real parameters); w is inverted."""
        return Coefficient(
            {(i, j, -k): c for (i, j, k), c in self._terms.items()}, _trusted=True
        )

    def eval_at_zero(self, var: str) -> "Coefficient":
        """Set var = 0: drop terms with positive var-exponent, keep exponent 0.

        A negative var-exponent means the value is not defined there.
        """
        idx = _check_var(var)
        out: Dict[Triple, int] = {}
        for e, c in self._terms.items():
            d = e[idx]
            if d < 0:
                raise EvaluationError(
                    f"negative power of {var} cannot be evaluated at {var}=0: {self}"
                )
            if d == 0:
                out[e] = c
        return Coefficient(out, _trusted=True)

    # -- units ---------------------------------------------------------

    def unit_inverse(self) -> "Coefficient | None":
        """Inverse if this is a ring unit (a single term with coefficient ±1)."""
        if len(self._terms) != 1:
            return None
        ((i, j, k), c), = self._terms.items()
        if c not in (1, -1):
            return None
        return Coefficient.monomial(c, -i, -j, -k)

    # -- inspection / printing ----------------------------------------

    def terms(self) -> Iterator[Tuple[Triple, int]]:
        return iter(sorted(self._terms.items()))

    def term_strings(self) -> Iterator[Tuple[int, str]]:
        """Yield (sign, body) per term in canonical (ascending triple) order.

        The body is the unsigned factor string, e.g. ``3*p^-1*w^2`` or ``1``.
        """
        for (i, j, k), c in sorted(self._terms.items()):
            sign = 1 if c > 0 else -1
            parts = []
            n = abs(c)
            if n != 1 or (i == 0 and j == 0 and k == 0):
                parts.append(str(n))
            for name, e in (("p", i), ("q", j), ("w", k)):
                if e == 1:
                    parts.append(name)
                elif e != 0:
                    parts.append(f"{name}^{e}")
            yield sign, "*".join(parts)

    def __str__(self) -> str:
        if not self._terms:
            return "0"
        out = []
        for sign, body in self.term_strings():
            if not out:
                out.append(("-" if sign < 0 else "") + body)
            else:
                out.append(("- " if sign < 0 else "+ ") + body)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"Coefficient({self})"


ZERO = Coefficient.integer(0)
ONE = Coefficient.integer(1)


def p_pow(e: int) -> Coefficient:
    return Coefficient.monomial(1, i=e)


def q_pow(e: int) -> Coefficient:
    return Coefficient.monomial(1, j=e)


def w_pow(e: int) -> Coefficient:
    return Coefficient.monomial(1, k=e)


def var_pow(var: str, e: int) -> Coefficient:
    """var^e for var in {'p', 'q'}."""
    _check_var(var)
    return p_pow(e) if var == "p" else q_pow(e)


def coeff_eval_zero(c: Coefficient, var: str) -> Coefficient:
    return c.eval_at_zero(var)


# ---------------------------------------------------------------------------
# Deformed integers and binomials.
#
# A "base" is the deformation unit: ('p', +1) means the variable p itself,
# ('p', -1) its inverse, similarly for q.  The public entry points take
# var in {'p','q'}; the signed bases serve the negative-index polynomial
# family and the inverse-parameter disc.
# ---------------------------------------------------------------------------

Base = Tuple[str, int]


def _base_pow(base: Base, e: int) -> Coefficient:
    var, s = base
    return var_pow(var, s * e)


def qint_base(n: int, base: Base) -> Coefficient:
    if n < 0:
        raise ValueError("deformed integers are defined for n >= 0")
    acc = ZERO
    for m in range(n):
        acc = acc + _base_pow(base, m)
    return acc


def qint(n: int, var: str = "p") -> Coefficient:
    """1 + v + ... + v^(n-1); zero for n = 0."""
    _check_var(var)
    return qint_base(n, (var, 1))


_QBINOM_MEMO: Dict[Tuple[int, int, Base], Coefficient] = {}


def qbinomial_base(n: int, m: int, base: Base) -> Coefficient:
    if m < 0 or m > n:
        raise ValueError(f"binomial index out of range: m={m}, n={n}")
    if m == 0 or m == n:
        return ONE
    key = (n, m, base)
    got = _QBINOM_MEMO.get(key)
    if got is None:
        # Pascal rule: C(n, m) = C(n-1, m) + v^(n-m) * C(n-1, m-1)
        got = qbinomial_base(n - 1, m, base) + _base_pow(base, n - m) * qbinomial_base(
            n - 1, m - 1, base
        )
        _QBINOM_MEMO[key] = got
    return got


def qbinomial(n: int, m: int, var: str = "p") -> Coefficient:
    """Deformed binomial coefficient, computed by the Pascal recursion."""
    _check_var(var)
    return qbinomial_base(n, m, (var, 1))


# ---------------------------------------------------------------------------
# The contraction-polynomial family Q in one variable Y.
# ---------------------------------------------------------------------------


class QPoly:
    """Sparse polynomial in Y with Coefficient coefficients (degrees >= 0).

    Members of the contraction family have zero constant term and degree
    equal to the absolute index; the type itself allows any polynomial,
    e.g. 1 + Q arising in product rules.
    """

    __slots__ = ("_coeffs",)

    def __init__(self, coeffs: Dict[int, Coefficient] | None = None, _trusted: bool = False):
        if coeffs is None:
            coeffs = {}
        if not _trusted:
            coeffs = {m: c for m, c in coeffs.items() if c}
        self._coeffs = coeffs

    @staticmethod
    def zero() -> "QPoly":
        return QPoly({}, _trusted=True)

    @staticmethod
    def term(m: int, c: Coefficient) -> "QPoly":
        if m < 0:
            raise ValueError("Y-exponents are nonnegative")
        return QPoly({m: c} if c else {}, _trusted=True)

    def __add__(self, other: "QPoly") -> "QPoly":
        out = dict(self._coeffs)
        for m, c in other._coeffs.items():
            s = out.get(m, ZERO) + c
            if s:
                out[m] = s
            else:
                out.pop(m, None)
        return QPoly(out, _trusted=True)

    def __neg__(self) -> "QPoly":
        return QPoly({m: -c for m, c in self._coeffs.items()}, _trusted=True)

    def __sub__(self, other: "QPoly") -> "QPoly":
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, Coefficient):
            if not other:
                return QPoly.zero()
            return QPoly({m: c * other for m, c in self._coeffs.items()}, _trusted=True)
        if not isinstance(other, QPoly):
            return NotImplemented
        out: Dict[int, Coefficient] = {}
        for m1, c1 in self._coeffs.items():
            for m2, c2 in other._coeffs.items():
                m = m1 + m2
                s = out.get(m, ZERO) + c1 * c2
                if s:
                    out[m] = s
                else:
                    del out[m]
        return QPoly(out, _trusted=True)

    __rmul__ = __mul__

    def __eq__(self, other) -> bool:
        if not isinstance(other, QPoly):
            return NotImplemented
        return self._coeffs == other._coeffs

    def __bool__(self) -> bool:
        return bool(self._coeffs)

    def is_zero(self) -> bool:
        return not self._coeffs

    def degree(self) -> int:
        return max(self._coeffs) if self._coeffs else -1

    def constant_term(self) -> Coefficient:
        return self._coeffs.get(0, ZERO)

    def coefficient(self, m: int) -> Coefficient:
        return self._coeffs.get(m, ZERO)

    def items(self) -> Iterator[Tuple[int, Coefficient]]:
        return iter(sorted(self._coeffs.items()))

    def rescale_base(self, base: Base, e: int) -> "QPoly":
        """Substitute Y -> base^e * Y: the degree-m coefficient gains base^(e*m)."""
        return QPoly(
            {m: c * _base_pow(base, e * m) for m, c in self._coeffs.items()},
            _trusted=True,
        )

    def __str__(self) -> str:
        if not self._coeffs:
            return "0"
        out = []
        for m, c in self.items():
            for sign, body in c.term_strings():
                piece = body
                if m > 0:
                    ypart = "Y" if m == 1 else f"Y^{m}"
                    piece = ypart if body == "1" else f"{body} {ypart}"
                if not out:
                    out.append(("-" if sign < 0 else "") + piece)
                else:
                    out.append(("- " if sign < 0 else "+ ") + piece)
        return " ".join(out)

    def __repr__(self) -> str:
        return f"QPoly({self})"


_Y = QPoly({1: ONE}, _trusted=True)
_QPOLY_ONE = QPoly({0: ONE}, _trusted=True)


def _q_closed_positive(n: int, base: Base) -> QPoly:
    # sum over m of (-1)^m * v^(-n*m + m(m+1)/2) * C(n, m)_v * Y^m
    coeffs: Dict[int, Coefficient] = {}
    for m in range(1, n + 1):
        c = qbinomial_base(n, m, base) * _base_pow(base, -n * m + m * (m + 1) // 2)
        if m % 2:
            c = -c
        coeffs[m] = c
    return QPoly(coeffs, _trusted=True)


_QPOLY_MEMO: Dict[Tuple[int, Base], QPoly] = {}


def qpoly_Q_base(mu: int, base: Base) -> QPoly:
    """Index-mu contraction polynomial over the given base.

    Always computed twice — closed form and one-step recursion — and the
    two results are checked against each other before being memoized.
    """
    if mu == 0:
        return QPoly.zero()
    key = (mu, base)
    got = _QPOLY_MEMO.get(key)
    if got is not None:
        return got
    var, s = base
    inv_base = (var, -s)
    v = _base_pow(base, 1)
    if mu > 0:
        closed = _q_closed_positive(mu, base)
        if mu == 1:
            rec = QPoly({1: -ONE}, _trusted=True)
        else:
            prev = qpoly_Q_base(mu - 1, base)
            rec = (_QPOLY_ONE - _Y) * prev.rescale_base(base, -1) - _Y
    else:
        n = -mu
        # the closed form for negative indices: inverse-base family at v*Y
        closed = _q_closed_positive(n, inv_base).rescale_base(base, 1)
        if n == 1:
            rec = QPoly({1: -v}, _trusted=True)
        else:
            prev = qpoly_Q_base(mu + 1, base)
            rec = (_QPOLY_ONE - _Y * v) * prev.rescale_base(base, 1) - _Y * v
    if closed != rec:
        raise AssertionError(f"closed form and recursion disagree at index {mu}")
    _QPOLY_MEMO[key] = closed
    return closed


def qpoly_Q(mu: int, var: str = "p") -> QPoly:
    _check_var(var)
    return qpoly_Q_base(mu, (var, 1))


def qpoly_Qpair_base(mu: int, nu: int, base: Base) -> QPoly:
    if mu * nu >= 0:
        return QPoly.zero()
    if abs(mu) <= abs(nu):
        return qpoly_Q_base(mu, base)
    return qpoly_Q_base(-nu, base).rescale_base(base, -(mu + nu))


def qpoly_Qpair(mu: int, nu: int, var: str = "p") -> QPoly:
    _check_var(var)
    return qpoly_Qpair_base(mu, nu, (var, 1))


def qpoly_rescale(poly: QPoly, e: int, var: str = "p") -> QPoly:
    _check_var(var)
    return poly.rescale_base((var, 1), e)
