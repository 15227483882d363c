"""Exact sparse polynomials over the rationals.

``BivariatePoly`` carries curve germs ``f(x, y)``.  The module-level ``u*``
helpers implement dense univariate arithmetic on ascending coefficient lists;
they only rely on ``+ - * /`` and comparison with ``0``, so they work for
``Fraction`` coefficients as well as number-field elements.
"""
from __future__ import annotations

import re
from fractions import Fraction
from math import comb
from typing import Iterable, Mapping, Sequence


class PolynomialSyntaxError(ValueError):
    pass


class ZeroPolynomial(ValueError):
    pass


_TERM_RE = re.compile(r"(?P<coef>\d+(?:/\d+)?)?(?P<vars>(?:\*?[A-Za-z](?:\^\d+)?)*)")
_VAR_RE = re.compile(r"\*?([A-Za-z])(?:\^(\d+))?")


def to_fraction(value) -> Fraction:
    if isinstance(value, Fraction):
        return value
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        try:
            return Fraction(value.strip())
        except (ValueError, ZeroDivisionError) as exc:
            raise ValueError(f"not an exact rational: {value!r}") from exc
    raise TypeError(f"refusing inexact value {value!r}")


def parse_terms(text: str, variables: Sequence[str]) -> dict[tuple[int, ...], Fraction]:
    """Parse ``[coef][*]x^i[*]y^j`` terms joined by ``+``/``-``.

    Returns a map from exponent tuples (ordered like ``variables``) to nonzero
    coefficients.  Parentheses are rejected; input must be expanded.
    """
    s = "".join(text.split())
    if not s:
        raise PolynomialSyntaxError("empty polynomial")
    index = {v: k for k, v in enumerate(variables)}
    out: dict[tuple[int, ...], Fraction] = {}
    pos = 0
    while pos < len(s):
        sign = 1
        if s[pos] in "+-":
            sign = -1 if s[pos] == "-" else 1
            pos += 1
        elif pos:
            raise PolynomialSyntaxError(f"expected '+' or '-' at column {pos}: {text!r}")
        m = _TERM_RE.match(s, pos)
        if m is None or m.end() == pos:
            raise PolynomialSyntaxError(f"bad term at column {pos}: {text!r}")
        coef_txt, vars_txt = m.group("coef"), m.group("vars")
        if coef_txt is None and vars_txt.startswith("*"):
            raise PolynomialSyntaxError(f"dangling '*' at column {pos}: {text!r}")
        try:
            coef = Fraction(coef_txt) if coef_txt else Fraction(1)
        except ZeroDivisionError as exc:
            raise PolynomialSyntaxError(f"zero denominator in {text!r}") from exc
        expo = [0] * len(variables)
        for vm in _VAR_RE.finditer(vars_txt):
            name, power = vm.group(1), vm.group(2)
            if name not in index:
                raise PolynomialSyntaxError(
                    f"unknown variable {name!r}; expected one of {list(variables)}")
            expo[index[name]] += int(power) if power is not None else 1
        key = tuple(expo)
        out[key] = out.get(key, Fraction(0)) + sign * coef
        pos = m.end()
    return {k: c for k, c in out.items() if c != 0}


def _fmt_coef(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def format_terms(terms: Mapping[tuple[int, ...], Fraction], variables: Sequence[str]) -> str:
    """Inverse of :func:`parse_terms`; terms sorted by descending total degree."""
    if not terms:
        return "0"
    keys = sorted(terms, key=lambda e: (-sum(e), tuple(-a for a in e)))
    pieces = []
    for k in keys:
        c = terms[k]
        mono = "*".join(
            v if a == 1 else f"{v}^{a}" for v, a in zip(variables, k) if a)
        mag = abs(c)
        if not mono:
            body = _fmt_coef(mag)
        elif mag == 1:
            body = mono
        else:
            body = f"{_fmt_coef(mag)}*{mono}"
        if not pieces:
            pieces.append(("-" if c < 0 else "") + body)
        else:
            pieces.append(("- " if c < 0 else "+ ") + body)
    return " ".join(pieces)


class BivariatePoly:
    """Sparse polynomial in ``x, y`` with exact rational coefficients.

    Zero coefficients are never stored, so ``terms`` is canonical and two
    polynomials are equal iff their term maps are equal.
    """

    __slots__ = ("terms",)

    def __init__(self, terms: Mapping[tuple[int, int], object] | None = None):
        clean: dict[tuple[int, int], Fraction] = {}
        for (i, j), c in (terms or {}).items():
            if i < 0 or j < 0:
                raise ValueError("negative exponent")
            c = to_fraction(c)
            if c:
                clean[(int(i), int(j))] = c
        self.terms = clean

    @classmethod
    def parse(cls, text: str) -> "BivariatePoly":
        return cls(parse_terms(text, ("x", "y")))

    @classmethod
    def x(cls) -> "BivariatePoly":
        return cls({(1, 0): 1})

    @classmethod
    def y(cls) -> "BivariatePoly":
        return cls({(0, 1): 1})

    @classmethod
    def constant(cls, c) -> "BivariatePoly":
        return cls({(0, 0): c})

    def __bool__(self) -> bool:
        return bool(self.terms)

    def __eq__(self, other) -> bool:
        if isinstance(other, (int, Fraction)):
            other = BivariatePoly.constant(other)
        if not isinstance(other, BivariatePoly):
            return NotImplemented
        return self.terms == other.terms

    def __hash__(self) -> int:
        return hash(frozenset(self.terms.items()))

    def __repr__(self) -> str:
        return f"BivariatePoly({str(self)!r})"

    def __str__(self) -> str:
        return format_terms(self.terms, ("x", "y"))

    def _coerce(self, other) -> "BivariatePoly":
        if isinstance(other, BivariatePoly):
            return other
        return BivariatePoly.constant(to_fraction(other))

    def __add__(self, other):
        other = self._coerce(other)
        out = dict(self.terms)
        for k, c in other.terms.items():
            out[k] = out.get(k, 0) + c
        return BivariatePoly(out)

    __radd__ = __add__

    def __neg__(self):
        return BivariatePoly({k: -c for k, c in self.terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        other = self._coerce(other)
        out: dict[tuple[int, int], Fraction] = {}
        for (i1, j1), c1 in self.terms.items():
            for (i2, j2), c2 in other.terms.items():
                k = (i1 + i2, j1 + j2)
                out[k] = out.get(k, 0) + c1 * c2
        return BivariatePoly(out)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative power")
        result, base = BivariatePoly.constant(1), self
        while n:
            if n & 1:
                result = result * base
            base = base * base
            n >>= 1
        return result

    def degree(self) -> int:
        if not self.terms:
            raise ZeroPolynomial("degree of the zero polynomial")
        return max(i + j for i, j in self.terms)

    def order(self) -> int:
        """Lowest total degree of a nonzero term (order of vanishing at 0)."""
        if not self.terms:
            raise ZeroPolynomial("order of the zero polynomial")
        return min(i + j for i, j in self.terms)

    def homogeneous_part(self, k: int) -> "BivariatePoly":
        return BivariatePoly({e: c for e, c in self.terms.items() if sum(e) == k})

    def diff_x(self) -> "BivariatePoly":
        return BivariatePoly({(i - 1, j): i * c for (i, j), c in self.terms.items() if i})

    def diff_y(self) -> "BivariatePoly":
        return BivariatePoly({(i, j - 1): j * c for (i, j), c in self.terms.items() if j})

    def __call__(self, x, y):
        return sum((c * x ** i * y ** j for (i, j), c in self.terms.items()), Fraction(0))

    def linear_change(self, a, b, c, d) -> "BivariatePoly":
        """Substitute ``x -> a*x + b*y``, ``y -> c*x + d*y``."""
        if to_fraction(a) * to_fraction(d) - to_fraction(b) * to_fraction(c) == 0:
            raise ValueError("singular coordinate change")
        X = BivariatePoly({(1, 0): a, (0, 1): b})
        Y = BivariatePoly({(1, 0): c, (0, 1): d})
        out = BivariatePoly()
        for (i, j), coef in self.terms.items():
            out = out + (X ** i) * (Y ** j) * coef
        return out


# -- dense univariate helpers (ascending coefficient lists) -----------------

def utrim(p: list) -> list:
    p = list(p)
    while p and p[-1] == 0:
        p.pop()
    return p


def udeg(p: Sequence) -> int:
    return len(p) - 1 if p else -1


def uadd(p: Sequence, q: Sequence) -> list:
    n = max(len(p), len(q))
    zero = _zero_like(p, q)
    return utrim([(p[k] if k < len(p) else zero) + (q[k] if k < len(q) else zero)
                  for k in range(n)])


def usub(p: Sequence, q: Sequence) -> list:
    return uadd(p, [-c for c in q])


def umul(p: Sequence, q: Sequence) -> list:
    if not p or not q:
        return []
    out = [p[0] * 0] * (len(p) + len(q) - 1)
    for i, a in enumerate(p):
        if a == 0:
            continue
        for j, b in enumerate(q):
            out[i + j] = out[i + j] + a * b
    return utrim(out)


def uscale(p: Sequence, c) -> list:
    return utrim([a * c for a in p])


def udivmod(p: Sequence, q: Sequence) -> tuple[list, list]:
    q = utrim(q)
    if not q:
        raise ZeroDivisionError("polynomial division by zero")
    r = utrim(p)
    if len(r) < len(q):
        return [], r
    lead = q[-1]
    quot = [q[0] * 0] * (len(r) - len(q) + 1)
    while len(r) >= len(q):
        shift = len(r) - len(q)
        c = r[-1] / lead
        quot[shift] = c
        for k, b in enumerate(q):
            r[k + shift] = r[k + shift] - c * b
        r = utrim(r)
    return utrim(quot), r


def umonic(p: Sequence) -> list:
    p = utrim(p)
    if not p:
        return []
    inv = 1 / p[-1]
    return [c * inv for c in p]


def ugcd(p: Sequence, q: Sequence) -> list:
    """Monic gcd by the Euclidean algorithm (exact field arithmetic)."""
    a, b = utrim(p), utrim(q)
    while b:
        a, b = b, udivmod(a, b)[1]
    return umonic(a)


def uderiv(p: Sequence) -> list:
    return utrim([k * p[k] for k in range(1, len(p))])


def ueval(p: Sequence, x):
    acc = x * 0
    for c in reversed(p):
        acc = acc * x + c
    return acc


def ushift(p: Sequence, a) -> list:
    """Coefficients of ``p(t + a)``."""
    n = len(p)
    if not n:
        return []
    out = [p[0] * 0] * n
    for k, c in enumerate(p):
        if c == 0:
            continue
        apow = c * 0 + 1
        for i in range(k, -1, -1):
            out[i] = out[i] + c * comb(k, i) * apow
            apow = apow * a
    return utrim(out)


def _zero_like(p: Sequence, q: Sequence):
    for seq in (p, q):
        if seq:
            return seq[0] * 0
    return Fraction(0)


def uformat(p: Sequence[Fraction], var: str = "x") -> str:
    return format_terms({(k,): c for k, c in enumerate(p) if c != 0}, (var,))


def uparse(text: str, var: str = "x") -> list[Fraction]:
    terms = parse_terms(text, (var,))
    if not terms:
        return []
    out = [Fraction(0)] * (max(e[0] for e in terms) + 1)
    for (k,), c in terms.items():
        out[k] = c
    return out


def as_fractions(values: Iterable) -> list[Fraction]:
    return [to_fraction(v) for v in values]


def uxgcd(a: Sequence, b: Sequence) -> tuple[list, list, list]:
    """Return ``(g, s, t)`` with ``s*a + t*b = g`` and ``g`` monic."""
    r0, r1 = utrim(a), utrim(b)
    one = _zero_like(a, b) + 1
    s0, s1 = [one], []
    t0, t1 = [], [one]
    while r1:
        q, r = udivmod(r0, r1)
        r0, r1 = r1, r
        s0, s1 = s1, usub(s0, umul(q, s1))
        t0, t1 = t1, usub(t0, umul(q, t1))
    if not r0:
        return [], s0, t0
    inv = 1 / r0[-1]
    return uscale(r0, inv), uscale(s0, inv), uscale(t0, inv)


def usquarefree(p: Sequence) -> list[tuple[list, int]]:
    """Yun's square-free decomposition in characteristic zero.

    Returns ``[(a_m, m), ...]`` with ``a_m`` monic, square-free, pairwise
    coprime and ``p = lc(p) * prod a_m**m``.  Trivial factors are dropped.
    """
    f = umonic(p)
    if udeg(f) <= 0:
        return []
    df = uderiv(f)
    a0 = ugcd(f, df)
    b = udivmod(f, a0)[0]
    c = udivmod(df, a0)[0]
    d = usub(c, uderiv(b))
    out = []
    m = 1
    while udeg(b) > 0:
        a = ugcd(b, d)
        b = udivmod(b, a)[0]
        c = udivmod(d, a)[0]
        d = usub(c, uderiv(b))
        if udeg(a) > 0:
            out.append((umonic(a), m))
        m += 1
    return out
