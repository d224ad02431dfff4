"""Multivariate polynomials with arbitrary-precision integer coefficients.

One IntPolynomial defines an affine model over every F_{p^e}: coefficients
are lifted through the canonical map Z -> F_p at evaluation time.
"""

from __future__ import annotations

from dataclasses import dataclass

from .ff import FieldDesc, FieldElement, lift_integer

Term = tuple[int, tuple[int, ...]]


@dataclass(frozen=True)
class IntPolynomial:
    variables: tuple[str, ...]
    terms: tuple[Term, ...]  # (coefficient, exponent tuple), normalized

    @classmethod
    def make(cls, variables, terms) -> "IntPolynomial":
        variables = tuple(variables)
        merged: dict[tuple[int, ...], int] = {}
        for coeff, exps in terms:
            exps = tuple(exps)
            if len(exps) != len(variables):
                raise ValueError("exponent tuple does not match variable list")
            if any(e < 0 for e in exps):
                raise ValueError("negative exponent")
            merged[exps] = merged.get(exps, 0) + coeff
        normalized = tuple(
            (c, e) for e, c in sorted(merged.items(), reverse=True) if c != 0
        )
        return cls(variables, normalized)

    @classmethod
    def constant(cls, c: int) -> "IntPolynomial":
        return cls.make((), [(c, ())] if c else [])

    @classmethod
    def variable(cls, name: str) -> "IntPolynomial":
        return cls.make((name,), [(1, (1,))])

    def is_zero(self) -> bool:
        return not self.terms

    def used_variables(self) -> tuple[str, ...]:
        used = set()
        for _, exps in self.terms:
            for v, e in zip(self.variables, exps):
                if e:
                    used.add(v)
        return tuple(sorted(used))

    def restrict(self) -> "IntPolynomial":
        """Drop variables that never occur."""
        return self.with_variables(self.used_variables())

    def with_variables(self, variables) -> "IntPolynomial":
        variables = tuple(variables)
        if set(self.used_variables()) - set(variables):
            raise ValueError("polynomial uses variables outside the new list")
        pos = {v: i for i, v in enumerate(variables)}
        terms = []
        for coeff, exps in self.terms:
            new = [0] * len(variables)
            for v, e in zip(self.variables, exps):
                if e:
                    new[pos[v]] = e
            terms.append((coeff, tuple(new)))
        return IntPolynomial.make(variables, terms)

    def _aligned(self, other: "IntPolynomial"):
        variables = tuple(sorted(set(self.variables) | set(other.variables)))
        return variables, self.with_variables(variables), other.with_variables(variables)

    def __add__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        variables, a, b = self._aligned(other)
        return IntPolynomial.make(variables, a.terms + b.terms)

    __radd__ = __add__

    def __neg__(self):
        return IntPolynomial.make(self.variables, [(-c, e) for c, e in self.terms])

    def __sub__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            other = IntPolynomial.constant(other)
        variables, a, b = self._aligned(other)
        terms = []
        for ca, ea in a.terms:
            for cb, eb in b.terms:
                terms.append((ca * cb, tuple(x + y for x, y in zip(ea, eb))))
        return IntPolynomial.make(variables, terms)

    __rmul__ = __mul__

    def __pow__(self, n: int):
        if n < 0:
            raise ValueError("negative polynomial power")
        result = IntPolynomial.constant(1)
        for _ in range(n):
            result = result * self
        return result

    def evaluate(self, point: dict[str, FieldElement], f: FieldDesc) -> FieldElement:
        acc = f.zero()
        for coeff, exps in self.terms:
            v = lift_integer(coeff, f)
            for name, e in zip(self.variables, exps):
                if e:
                    v = v * point[name] ** e
            acc = acc + v
        return acc

    def __str__(self):
        if not self.terms:
            return "0"
        chunks = []
        for i, (coeff, exps) in enumerate(self.terms):
            factors = []
            for v, e in zip(self.variables, exps):
                if e == 1:
                    factors.append(v)
                elif e > 1:
                    factors.append(f"{v}^{e}")
            mag = abs(coeff)
            if not factors or mag != 1:
                factors.insert(0, str(mag))
            body = "*".join(factors)
            if i == 0:
                chunks.append(body if coeff > 0 else f"-{body}")
            else:
                chunks.append(f"+ {body}" if coeff > 0 else f"- {body}")
        return " ".join(chunks)


@dataclass(frozen=True)
class AffineModel:
    """Simultaneous vanishing locus of integer polynomials in affine space."""

    equations: tuple[IntPolynomial, ...]
    num_vars: int
    variables: tuple[str, ...]

    @classmethod
    def from_equations(cls, equations, variables=None) -> "AffineModel":
        equations = tuple(equations)
        if variables is None:
            used = set()
            for eq in equations:
                used.update(eq.used_variables())
            variables = tuple(sorted(used))
        else:
            variables = tuple(variables)
            for eq in equations:
                if set(eq.used_variables()) - set(variables):
                    raise ValueError("equation uses an undeclared variable")
        equations = tuple(eq.with_variables(variables) for eq in equations)
        return cls(equations, len(variables), variables)
