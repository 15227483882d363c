"""Singular fibres of ``y^2 = p(x)`` and the versal family of the cusp.

A root of ``p`` of multiplicity ``m >= 2`` gives the germ ``y^2 = x^m``, i.e. an
``A_{m-1}`` point with delta ``floor(m/2)``.  Roots are located through Yun's
square-free decomposition over Q; repeated irrational roots are reported by
their irreducible factor, never approximated.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from typing import Iterable, Sequence

from .fields import factor_rational
from .poly import (as_fractions, udeg, ueval, uformat, ugcd, umonic, uparse,
                   usquarefree, uderiv, utrim)


class StratificationMismatch(AssertionError):
    """The discriminant stratification disagreed with the parametrised locus."""


@dataclass(frozen=True)
class MonicUnivariate:
    """``p(x)`` with ascending coefficients and leading coefficient 1."""
    coeffs: tuple[Fraction, ...]

    def __post_init__(self):
        c = tuple(utrim(as_fractions(self.coeffs)))
        if udeg(c) < 1:
            raise ValueError("need a polynomial of degree >= 1")
        if c[-1] != 1:
            raise ValueError("leading coefficient must be 1")
        object.__setattr__(self, "coeffs", c)

    @classmethod
    def from_any(cls, p) -> "MonicUnivariate":
        """Accept a MonicUnivariate, a coefficient list or a string in ``x``;
        non-monic input is normalised (the roots are unchanged)."""
        if isinstance(p, MonicUnivariate):
            return p
        coeffs = uparse(p) if isinstance(p, str) else as_fractions(p)
        coeffs = utrim(coeffs)
        if not coeffs:
            raise ValueError("p must be nonzero")
        return cls(tuple(umonic(coeffs)))

    @property
    def degree(self) -> int:
        return len(self.coeffs) - 1

    def __str__(self) -> str:
        return uformat(list(self.coeffs))


@dataclass(frozen=True)
class SingularPoint:
    location: Fraction | None     # rational root, or None for an irrational factor
    factor: str                   # irreducible factor carrying the root
    degree: int                   # number of conjugate points it stands for
    root_multiplicity: int

    @property
    def label(self) -> str:
        return f"A{self.root_multiplicity - 1}"


@dataclass(frozen=True)
class FiberClassification:
    multiplicity_profile: tuple[tuple[int, int], ...]   # (m, count) sorted by m
    singular_points: tuple[SingularPoint, ...]
    total_delta: int

    @property
    def smooth(self) -> bool:
        return not self.multiplicity_profile

    def labels(self) -> list[str]:
        """``A_k`` labels counted with conjugates, e.g. ``['A1', 'A1']``."""
        out = []
        for m, cnt in self.multiplicity_profile:
            out.extend([f"A{m - 1}"] * cnt)
        return out

    def as_dict(self) -> dict:
        return {
            "smooth": self.smooth,
            "total_delta": self.total_delta,
            "profile": [{"m": m, "count": c} for m, c in self.multiplicity_profile],
            "singular_points": [
                {"location": p.location, "factor": p.factor, "degree": p.degree,
                 "type": p.label} for p in self.singular_points],
        }


def classify_fiber(p) -> FiberClassification:
    p = MonicUnivariate.from_any(p)
    profile: dict[int, int] = {}
    points = []
    for part, m in usquarefree(list(p.coeffs)):
        if m < 2:
            continue
        for q, _ in factor_rational(part):
            e = udeg(q)
            profile[m] = profile.get(m, 0) + e
            loc = -q[0] if e == 1 else None
            points.append(SingularPoint(loc, uformat(q), e, m))
    points.sort(key=lambda sp: (sp.root_multiplicity, sp.location is None,
                                sp.location if sp.location is not None else 0, sp.factor))
    prof = tuple(sorted(profile.items()))
    delta = sum(cnt * (m // 2) for m, cnt in prof)
    return FiberClassification(prof, tuple(points), delta)


# -- the versal family y^2 = x^3 + a x + b --------------------------------

@dataclass(frozen=True)
class CubicStratum:
    label: str          # "Smooth" | "OneNode" | "Cusp"
    discriminant: Fraction
    a: Fraction
    b: Fraction

    def as_dict(self) -> dict:
        return {"a": self.a, "b": self.b, "discriminant": self.discriminant,
                "label": self.label}


def cubic_discriminant(a, b) -> Fraction:
    """``-(4 a^3 + 27 b^2)``; vanishes iff ``x^3 + a x + b`` has a repeated root."""
    a, b = Fraction(a), Fraction(b)
    return -(4 * a ** 3 + 27 * b ** 2)


def stratify_cubic(a, b) -> CubicStratum:
    a, b = Fraction(a), Fraction(b)
    disc = cubic_discriminant(a, b)
    if disc != 0:
        label = "Smooth"
    elif a == 0 and b == 0:
        label = "Cusp"
    else:
        label = "OneNode"
    return CubicStratum(label, disc, a, b)


def fiber_label(fc: FiberClassification) -> str:
    """Map a cubic's fibre classification onto the stratum vocabulary."""
    labels = fc.labels()
    if not labels:
        return "Smooth"
    if labels == ["A1"]:
        return "OneNode"
    if labels == ["A2"]:
        return "Cusp"
    return "Other"


def scan_discriminant(t_values: Iterable) -> list[CubicStratum]:
    """Walk the discriminant curve ``(a, b) = (-3 t^2, 2 t^3)``."""
    out = []
    for t in t_values:
        t = Fraction(t)
        st = stratify_cubic(-3 * t ** 2, 2 * t ** 3)
        expected = "Cusp" if t == 0 else "OneNode"
        if st.label != expected:
            raise StratificationMismatch(
                f"t={t}: expected {expected}, got {st.label} (discriminant {st.discriminant})")
        out.append(st)
    return out


# -- one-parameter families ------------------------------------------------

@dataclass(frozen=True)
class Transition:
    s_from: Fraction
    s_to: Fraction
    before: tuple[str, ...]
    after: tuple[str, ...]
    delta_before: int
    delta_after: int

    @property
    def semicontinuous(self) -> bool:
        """delta at the later (limit) sample is at least delta nearby."""
        return self.delta_after >= self.delta_before

    def as_dict(self) -> dict:
        return {"from": self.s_from, "to": self.s_to, "before": list(self.before),
                "after": list(self.after), "delta_before": self.delta_before,
                "delta_after": self.delta_after, "semicontinuous": self.semicontinuous}


@dataclass(frozen=True)
class PathReport:
    samples: tuple[Fraction, ...]
    fibers: tuple[FiberClassification, ...]
    transitions: tuple[Transition, ...] = field(default=())

    @property
    def deltas(self) -> list[int]:
        return [f.total_delta for f in self.fibers]

    @property
    def equigeneric(self) -> bool:
        return len(set(self.deltas)) <= 1

    def as_dict(self) -> dict:
        return {
            "samples": [
                {"s": s, "delta": fc.total_delta, "types": fc.labels()}
                for s, fc in zip(self.samples, self.fibers)],
            "equigeneric": self.equigeneric,
            "transitions": [t.as_dict() for t in self.transitions],
        }


def parse_family(coeffs: Sequence) -> list[list[Fraction]]:
    """Coefficient functions of ``p_s`` (ascending in x), each a polynomial in s."""
    out = []
    for c in coeffs:
        if isinstance(c, str):
            out.append(uparse(c, "s"))
        elif isinstance(c, (int, Fraction)):
            out.append(utrim([Fraction(c)]))
        else:
            out.append(utrim(as_fractions(c)))
    if not out:
        raise ValueError("family needs at least one coefficient")
    return out


def specialize(family: Sequence[Sequence[Fraction]], s) -> list[Fraction]:
    s = Fraction(s)
    return utrim([ueval(c, s) if c else Fraction(0) for c in family])


def equigeneric_path_check(family, samples: Iterable) -> PathReport:
    """Classify ``y^2 = p_s(x)`` along the samples, in the given order.

    Each change of the singularity types between consecutive samples is
    recorded; the later sample is treated as the limit.
    """
    fam = parse_family(family)
    ss = tuple(Fraction(s) for s in samples)
    fibers = tuple(classify_fiber(specialize(fam, s)) for s in ss)
    transitions = []
    for k in range(1, len(ss)):
        before, after = fibers[k - 1], fibers[k]
        if before.multiplicity_profile != after.multiplicity_profile:
            transitions.append(Transition(ss[k - 1], ss[k], tuple(before.labels()),
                                          tuple(after.labels()), before.total_delta,
                                          after.total_delta))
    return PathReport(ss, fibers, tuple(transitions))


def has_repeated_root(p: Sequence[Fraction]) -> bool:
    """Independent gcd test: ``deg gcd(p, p') >= 1``."""
    return udeg(ugcd(p, uderiv(p))) >= 1
