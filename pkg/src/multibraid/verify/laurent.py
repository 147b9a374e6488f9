"""Exact Laurent polynomials in one variable, as sparse exponent->int maps.

Coefficients are Python integers, exponents may be negative.  The unit of
the exponent is whatever the caller labels it (powers of A for brackets,
powers of t^(1/2) for Jones polynomials); the arithmetic does not care.
Zero coefficients are never stored, so equality is plain dict equality.
"""

from __future__ import annotations

from dataclasses import dataclass, field


@dataclass(frozen=True)
class LaurentPoly:
    coeffs: dict[int, int] = field(default_factory=dict)

    def __post_init__(self):
        object.__setattr__(
            self, "coeffs", {e: c for e, c in self.coeffs.items() if c != 0}
        )

    @staticmethod
    def zero() -> "LaurentPoly":
        return LaurentPoly({})

    @staticmethod
    def one() -> "LaurentPoly":
        return LaurentPoly({0: 1})

    @staticmethod
    def monomial(exponent: int, coeff: int = 1) -> "LaurentPoly":
        return LaurentPoly({exponent: coeff})

    def is_zero(self) -> bool:
        return not self.coeffs

    def __add__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) + c
        return LaurentPoly(out)

    def __sub__(self, other: "LaurentPoly") -> "LaurentPoly":
        out = dict(self.coeffs)
        for e, c in other.coeffs.items():
            out[e] = out.get(e, 0) - c
        return LaurentPoly(out)

    def __neg__(self) -> "LaurentPoly":
        return LaurentPoly({e: -c for e, c in self.coeffs.items()})

    def __mul__(self, other: "LaurentPoly") -> "LaurentPoly":
        out: dict[int, int] = {}
        for e1, c1 in self.coeffs.items():
            for e2, c2 in other.coeffs.items():
                e = e1 + e2
                out[e] = out.get(e, 0) + c1 * c2
        return LaurentPoly(out)

    def scale(self, k: int) -> "LaurentPoly":
        return LaurentPoly({e: k * c for e, c in self.coeffs.items()})

    def shift(self, d: int) -> "LaurentPoly":
        """Multiply by the d-th power of the variable."""
        return LaurentPoly({e + d: c for e, c in self.coeffs.items()})

    def __pow__(self, k: int) -> "LaurentPoly":
        if k < 0:
            raise ValueError("only single-term units can be inverted; use shift")
        out = LaurentPoly.one()
        for _ in range(k):
            out = out * self
        return out

    def substitute_inverse(self) -> "LaurentPoly":
        """The image under variable -> variable^-1."""
        return LaurentPoly({-e: c for e, c in self.coeffs.items()})

    def __eq__(self, other) -> bool:
        return isinstance(other, LaurentPoly) and self.coeffs == other.coeffs

    def __hash__(self):
        return hash(tuple(sorted(self.coeffs.items())))

    def terms(self) -> list[tuple[int, int]]:
        return sorted(self.coeffs.items())

    def __str__(self) -> str:
        return format_poly(self, "q")


def format_poly(p: LaurentPoly, var: str) -> str:
    """Human-readable form, ascending exponents, e.g. ``-q^-2 + 3 + q^5``."""
    if p.is_zero():
        return "0"
    parts = []
    for e, c in p.terms():
        if e == 0:
            body = str(abs(c))
        else:
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            body = f"{mag}{var}^{e}" if e != 1 else f"{mag}{var}"
        if not parts:
            parts.append(body if c > 0 else "-" + body)
        else:
            parts.append(("+ " if c > 0 else "- ") + body)
    return " ".join(parts)


def parse_poly(text: str, var: str) -> LaurentPoly:
    """Inverse of format_poly for the given variable name.

    Terms are separated by ``" + "`` / ``" - "``; a leading ``-`` binds to
    the first term.  Minus signs inside exponents are untouched.
    """
    text = text.strip()
    if text == "0":
        return LaurentPoly.zero()
    out: dict[int, int] = {}
    sign = 1
    if text.startswith("-"):
        sign = -1
        text = text[1:].strip()
    while text:
        cut_plus = text.find(" + ")
        cut_minus = text.find(" - ")
        cuts = [c for c in (cut_plus, cut_minus) if c != -1]
        cut = min(cuts) if cuts else len(text)
        chunk = text[:cut].strip()
        next_sign = 1 if cut == cut_plus else -1
        text = text[cut + 3 :].strip() if cut < len(text) else ""
        if var not in chunk:
            out[0] = out.get(0, 0) + sign * int(chunk)
        else:
            head, _, tail = chunk.partition(var)
            coeff = int(head.rstrip("*").strip()) if head.strip() else 1
            exp = int(tail.lstrip("^").strip()) if tail.strip() else 1
            out[exp] = out.get(exp, 0) + sign * coeff
        sign = next_sign
    return LaurentPoly(out)
