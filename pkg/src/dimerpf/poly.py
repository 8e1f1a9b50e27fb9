"""Sparse multivariate polynomials with exact rational coefficients.

Exponents may be negative and may be half-integers, so Laurent polynomials
in square roots of the variables are representable exactly.  An optional
per-variable degree cap truncates products eagerly.
"""

from __future__ import annotations

from fractions import Fraction
from typing import Iterable, Mapping, Union

Exponent = Union[int, Fraction]
Monomial = tuple  # tuple[tuple[str, Exponent], ...], sorted by variable name
Scalar = Union[int, Fraction]


def to_fraction(value) -> Fraction:
    """Parse ints, Fractions and strings like ``"3/2"`` into a Fraction."""
    if isinstance(value, Fraction):
        return value
    if isinstance(value, bool):
        raise TypeError("booleans are not weights")
    if isinstance(value, int):
        return Fraction(value)
    if isinstance(value, str):
        return Fraction(value.strip())
    if isinstance(value, float):
        raise TypeError("floats are not accepted as exact weights; pass a string")
    raise TypeError(f"cannot interpret {value!r} as an exact rational")


def _norm_exp(e) -> Exponent:
    e = Fraction(e)
    if e.denominator == 1:
        return int(e)
    if e.denominator != 2:
        raise ValueError(f"exponent {e} is not a multiple of 1/2")
    return e


def _mono(pairs: Iterable[tuple[str, Exponent]]) -> Monomial:
    acc: dict[str, Fraction] = {}
    for name, e in pairs:
        acc[name] = acc.get(name, 0) + Fraction(e)
    return tuple(sorted((k, _norm_exp(v)) for k, v in acc.items() if v != 0))


def _mono_mul(a: Monomial, b: Monomial) -> Monomial:
    if not a:
        return b
    if not b:
        return a
    # both are sorted by name: merge them
    out = []
    i = j = 0
    la, lb = len(a), len(b)
    while i < la and j < lb:
        na, ea = a[i]
        nb, eb = b[j]
        if na == nb:
            e = ea + eb
            if e != 0:
                out.append((na, e if type(e) is int else _norm_exp(e)))
            i += 1
            j += 1
        elif na < nb:
            out.append(a[i])
            i += 1
        else:
            out.append(b[j])
            j += 1
    out.extend(a[i:])
    out.extend(b[j:])
    return tuple(out)


def format_exponent(e: Exponent) -> str:
    e = Fraction(e)
    return str(e.numerator) if e.denominator == 1 else f"{e.numerator}/{e.denominator}"


class SparsePoly:
    """Immutable sparse polynomial ``{monomial: coefficient}``."""

    __slots__ = ("_terms", "_caps")

    def __init__(self, terms: Mapping[Monomial, Scalar] | None = None, caps: Mapping[str, int] | None = None):
        clean: dict[Monomial, Fraction] = {}
        caps = dict(caps) if caps else None
        for mono, c in (terms or {}).items():
            c = to_fraction(c)
            if c == 0:
                continue
            mono = _mono(mono)
            if caps and _exceeds(mono, caps):
                continue
            clean[mono] = clean.get(mono, Fraction(0)) + c
            if clean[mono] == 0:
                del clean[mono]
        self._terms = clean
        self._caps = caps

    @classmethod
    def _raw(cls, terms: dict[Monomial, Fraction], caps) -> "SparsePoly":
        """Trusted constructor: monomials already normalised and within caps."""
        obj = cls.__new__(cls)
        obj._terms = {m: c for m, c in terms.items() if c != 0}
        obj._caps = caps
        return obj

    # construction -----------------------------------------------------
    @classmethod
    def constant(cls, c: Scalar, caps=None) -> "SparsePoly":
        return cls({(): c}, caps)

    @classmethod
    def var(cls, name: str, exponent: Exponent = 1, coeff: Scalar = 1, caps=None) -> "SparsePoly":
        return cls({((name, exponent),): coeff}, caps)

    @classmethod
    def from_coeffs(cls, name: str, coeffs: Mapping[Exponent, Scalar]) -> "SparsePoly":
        return cls({((name, e),) if e != 0 else (): c for e, c in coeffs.items()})

    @classmethod
    def lift(cls, value) -> "SparsePoly":
        if isinstance(value, SparsePoly):
            return value
        return cls.constant(to_fraction(value))

    # access -------------------------------------------------------------
    @property
    def terms(self) -> dict[Monomial, Fraction]:
        return dict(self._terms)

    @property
    def caps(self) -> dict[str, int] | None:
        return dict(self._caps) if self._caps else None

    def items(self):
        return self._terms.items()

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def is_constant(self) -> bool:
        return all(m == () for m in self._terms)

    def constant_term(self) -> Fraction:
        return self._terms.get((), Fraction(0))

    def variables(self) -> set[str]:
        return {name for mono in self._terms for name, _ in mono}

    def degree(self, name: str) -> Exponent:
        """Largest exponent of ``name`` (0 for the zero polynomial)."""
        best: Exponent = 0
        for mono in self._terms:
            for v, e in mono:
                if v == name and e > best:
                    best = e
        return best

    def coeff(self, monomial: Mapping[str, Exponent] | Monomial = ()) -> Fraction:
        mono = _mono(monomial.items() if isinstance(monomial, Mapping) else monomial)
        return self._terms.get(mono, Fraction(0))

    def univariate(self, name: str) -> dict[Exponent, Fraction]:
        """Exponent -> coefficient map; raises if other variables occur."""
        out: dict[Exponent, Fraction] = {}
        for mono, c in self._terms.items():
            if not mono:
                out[0] = c
                continue
            if len(mono) != 1 or mono[0][0] != name:
                raise ValueError(f"polynomial is not univariate in {name!r}: {self!r}")
            out[mono[0][1]] = c
        return out

    # arithmetic -------------------------------------------------------------
    def _merged_caps(self, other: "SparsePoly"):
        if not self._caps:
            return other._caps
        if not other._caps:
            return self._caps
        caps = dict(self._caps)
        for k, v in other._caps.items():
            caps[k] = min(v, caps.get(k, v))
        return caps

    def __add__(self, other) -> "SparsePoly":
        other = SparsePoly.lift(other)
        terms = dict(self._terms)
        caps = self._merged_caps(other)
        for mono, c in other._terms.items():
            if caps and _exceeds(mono, caps):
                continue
            terms[mono] = terms.get(mono, 0) + c
        if caps and caps != self._caps:
            terms = {m: c for m, c in terms.items() if not _exceeds(m, caps)}
        return SparsePoly._raw(terms, caps)

    __radd__ = __add__

    def __neg__(self) -> "SparsePoly":
        return SparsePoly._raw({m: -c for m, c in self._terms.items()}, self._caps)

    def __sub__(self, other) -> "SparsePoly":
        return self + (-SparsePoly.lift(other))

    def __rsub__(self, other) -> "SparsePoly":
        return SparsePoly.lift(other) + (-self)

    def __mul__(self, other) -> "SparsePoly":
        if not isinstance(other, SparsePoly):
            c = to_fraction(other)
            if c == 0:
                return SparsePoly({}, self._caps)
            return SparsePoly._raw({m: v * c for m, v in self._terms.items()}, self._caps)
        caps = self._merged_caps(other)
        terms: dict[Monomial, Fraction] = {}
        for ma, ca in self._terms.items():
            for mb, cb in other._terms.items():
                mono = _mono_mul(ma, mb)
                if caps and _exceeds(mono, caps):
                    continue
                terms[mono] = terms.get(mono, 0) + ca * cb
        return SparsePoly._raw(terms, caps)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "SparsePoly":
        if k < 0:
            raise ValueError("negative powers are not supported")
        out = SparsePoly.constant(1, self._caps)
        for _ in range(k):
            out = out * self
        return out

    def __eq__(self, other) -> bool:
        if isinstance(other, SparsePoly):
            return self._terms == other._terms
        try:
            return self._terms == SparsePoly.lift(other)._terms
        except TypeError:
            return NotImplemented

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    # evaluation / substitution -------------------------------------------------
    def evaluate(self, point: Mapping[str, Scalar]) -> Fraction:
        """Exact value; every occurring variable needs a value and integral exponent."""
        total = Fraction(0)
        for mono, c in self._terms.items():
            term = c
            for name, e in mono:
                if Fraction(e).denominator != 1:
                    raise ValueError("cannot evaluate a half-integer power exactly")
                term *= to_fraction(point[name]) ** int(e)
            total += term
        return total

    def substitute(self, mapping: Mapping[str, "SparsePoly"]) -> "SparsePoly":
        """Replace variables by polynomials (integral exponents only for replaced ones)."""
        out = SparsePoly({}, None)
        for mono, c in self._terms.items():
            term = SparsePoly.constant(c)
            keep = []
            for name, e in mono:
                if name in mapping:
                    if Fraction(e).denominator != 1 or e < 0:
                        raise ValueError("substitution needs non-negative integral exponents")
                    term = term * (SparsePoly.lift(mapping[name]) ** int(e))
                else:
                    keep.append((name, e))
            out = out + term * SparsePoly({tuple(keep): 1})
        return out

    def map_monomials(self, fn) -> "SparsePoly":
        """Apply ``fn(monomial) -> (scalar, monomial)`` to each term and re-collect."""
        terms: dict[Monomial, Fraction] = {}
        for mono, c in self._terms.items():
            scale, new = fn(mono)
            new = _mono(new)
            terms[new] = terms.get(new, 0) + c * to_fraction(scale)
        return SparsePoly(terms)

    def scale_exponents(self, name: str, factor) -> "SparsePoly":
        """Multiply every exponent of ``name`` by ``factor`` (e.g. x -> z^2 is factor 2)."""
        factor = Fraction(factor)
        return self.map_monomials(
            lambda mono: (1, tuple((v, e * factor) if v == name else (v, e) for v, e in mono))
        )

    def rename(self, old: str, new: str) -> "SparsePoly":
        return self.map_monomials(lambda mono: (1, tuple((new if v == old else v, e) for v, e in mono)))

    # presentation ---------------------------------------------------------------
    def __repr__(self) -> str:
        if not self._terms:
            return "0"
        parts = []
        for mono, c in sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]), reverse=True):
            body = "*".join(name if e == 1 else f"{name}^{format_exponent(e)}" for name, e in mono)
            if not body:
                parts.append(str(c))
            elif c == 1:
                parts.append(body)
            elif c == -1:
                parts.append(f"-{body}")
            else:
                parts.append(f"{c}*{body}")
        return " + ".join(parts).replace("+ -", "- ")

    def to_json(self, name: str | None = None) -> dict[str, str]:
        """Univariate polys map exponent strings to coefficient strings.

        Multivariate polys (or ``name=None`` with several variables) use a
        monomial string key such as ``"lam1^2*del1_2"`` (``"1"`` for constants).
        """
        vars_ = self.variables()
        if name is None and len(vars_) == 1:
            name = next(iter(vars_))
        if name is not None and vars_ <= {name}:
            return {format_exponent(e): str(c) for e, c in sorted(self.univariate(name).items(), reverse=True)}
        out = {}
        for mono, c in sorted(self._terms.items(), key=lambda kv: _sort_key(kv[0]), reverse=True):
            key = "*".join(v if e == 1 else f"{v}^{format_exponent(e)}" for v, e in mono) or "1"
            out[key] = str(c)
        return out

    @classmethod
    def from_json(cls, data: Mapping[str, str], name: str) -> "SparsePoly":
        return cls.from_coeffs(name, {_norm_exp(Fraction(k)): Fraction(v) for k, v in data.items()})


def _sort_key(mono: Monomial):
    return (sum(Fraction(e) for _, e in mono), tuple((v, Fraction(e)) for v, e in mono))


def _exceeds(mono: Monomial, caps: Mapping[str, int]) -> bool:
    for name, e in mono:
        cap = caps.get(name)
        if cap is not None and e > cap:
            return True
    return False


def univariate(coeffs: Mapping[Exponent, Scalar], name: str = "x") -> SparsePoly:
    """Shorthand: ``univariate({2: 1, 1: 4, 0: 2}, "z")``."""
    return SparsePoly.from_coeffs(name, coeffs)
