"""
Polinomios multivariados exactos sobre los enteros.

``MultiPoly`` envuelve un elemento de un anillo ``ZZ[gens]`` de sympy con orden
graduado lexicográfico. El orden de las variables lo fija la tupla ``gens``: la
primera variable es la mayor. Los coeficientes expuestos son siempre ``int``.
"""

import re
from functools import lru_cache
from typing import Dict, Iterable, List, Mapping, Optional, Sequence, Tuple, Union

from sympy import Symbol
from sympy.polys.domains import ZZ
from sympy.polys.orderings import grlex
from sympy.polys.polyerrors import CoercionFailed, ExactQuotientFailed
from sympy.polys.rings import PolyElement, PolyRing
from sympy.parsing.sympy_parser import (
    convert_xor,
    parse_expr,
    standard_transformations,
)

from .errors import (
    ArityMismatchError,
    NotDivisibleError,
    PolynomialDivisionByZeroError,
    PolynomialParseError,
    VariableOrderMismatchError,
)

Monomial = Tuple[int, ...]
Gens = Tuple[str, ...]

_TRANSFORMATIONS = standard_transformations + (convert_xor,)
_NAME_RE = re.compile(r"^[A-Za-z_][A-Za-z_0-9]*$")


@lru_cache(maxsize=None)
def poly_ring(gens: Gens) -> PolyRing:
    """
    Devuelve el anillo ``ZZ[gens]`` (grlex), compartido por todos los polinomios
    con el mismo orden de variables.

    Args:
        gens: Nombres de las variables en orden decreciente

    Returns:
        PolyRing: Anillo de sympy
    """
    for name in gens:
        if not _NAME_RE.match(name):
            raise PolynomialParseError(f"Nombre de variable inválido: {name!r}", name)
    return PolyRing(gens, ZZ, grlex)


def z_gens(n: int, prefix: str = "z") -> Gens:
    """Variables ``z1..zn``."""
    return tuple(f"{prefix}{i}" for i in range(1, n + 1))


def zh_gens(n: int) -> Gens:
    """Orden global ``(z1..zn, h1..hn)`` de las formas sigma."""
    return z_gens(n, "z") + z_gens(n, "h")


def w_gens(count: int) -> Gens:
    """Variables ``w1..w_count`` de los polinomios Psi."""
    return z_gens(count, "w")


class MultiPoly:
    """Polinomio disperso con coeficientes enteros y orden de variables fijo."""

    __slots__ = ("_poly", "_term_list")

    def __init__(self, poly: PolyElement):
        self._poly = poly
        self._term_list: Optional[List[Tuple[Monomial, int]]] = None

    # Construcción

    @classmethod
    def zero(cls, gens: Sequence[str]) -> "MultiPoly":
        return cls(poly_ring(tuple(gens)).zero)

    @classmethod
    def one(cls, gens: Sequence[str]) -> "MultiPoly":
        return cls(poly_ring(tuple(gens)).one)

    @classmethod
    def constant(cls, gens: Sequence[str], value: int) -> "MultiPoly":
        return cls(poly_ring(tuple(gens)).ground_new(int(value)))

    @classmethod
    def variable(cls, gens: Sequence[str], name: str) -> "MultiPoly":
        gens = tuple(gens)
        if name not in gens:
            raise VariableOrderMismatchError(gens, (name,))
        ring = poly_ring(gens)
        return cls(ring.gens[gens.index(name)])

    @classmethod
    def from_terms(
        cls, gens: Sequence[str], terms: Mapping[Monomial, int]
    ) -> "MultiPoly":
        """
        Construye un polinomio desde un mapa monomio -> coeficiente.

        Args:
            gens: Orden de variables
            terms: Exponentes (uno por variable) y coeficientes; se descartan ceros

        Returns:
            MultiPoly: Polinomio en forma canónica
        """
        gens = tuple(gens)
        for monom in terms:
            if len(monom) != len(gens):
                raise ArityMismatchError(len(gens), len(monom), "exponentes")
        ring = poly_ring(gens)
        return cls(ring.from_dict({m: int(c) for m, c in terms.items() if c}))

    @classmethod
    def parse(cls, text: str, gens: Sequence[str]) -> "MultiPoly":
        """
        Lee la forma textual ``coeff*var^e*...`` (u otra expresión polinomial).

        Args:
            text: Texto del polinomio
            gens: Orden de variables del resultado

        Returns:
            MultiPoly: Polinomio leído

        Raises:
            PolynomialParseError: Si el texto no es un polinomio entero en ``gens``
        """
        gens = tuple(gens)
        ring = poly_ring(gens)
        local = {name: Symbol(name) for name in gens}
        try:
            expr = parse_expr(text, local_dict=local, transformations=_TRANSFORMATIONS)
            return cls(ring.from_expr(expr))
        except (SyntaxError, TypeError, ValueError, CoercionFailed) as e:
            raise PolynomialParseError(f"No se pudo interpretar el polinomio: {e}", text)

    # Acceso

    @property
    def gens(self) -> Gens:
        return tuple(str(s) for s in self._poly.ring.symbols)

    @property
    def nvars(self) -> int:
        return int(self._poly.ring.ngens)

    @property
    def ring(self) -> PolyRing:
        return self._poly.ring

    @property
    def raw(self) -> PolyElement:
        """Elemento de sympy subyacente."""
        return self._poly

    def term_list(self) -> List[Tuple[Monomial, int]]:
        """Términos en orden grlex decreciente, con coeficientes ``int``."""
        if self._term_list is None:
            self._term_list = [
                (tuple(m), int(c)) for m, c in self._poly.terms()
            ]
        return self._term_list

    def terms(self) -> Dict[Monomial, int]:
        return dict(self.term_list())

    def __len__(self) -> int:
        return len(self._poly)

    def is_zero(self) -> bool:
        return not self._poly

    def __bool__(self) -> bool:
        return bool(self._poly)

    def total_degree(self) -> int:
        """Grado total; -1 para el polinomio cero."""
        if not self._poly:
            return -1
        return max(sum(m) for m, _ in self.term_list())

    def degree_in(self, names: Iterable[str]) -> int:
        """Grado conjunto en el bloque de variables ``names``; -1 si es cero."""
        idx = self._indices(names)
        if not self._poly:
            return -1
        return max(sum(m[i] for i in idx) for m, _ in self.term_list())

    def bidegree(
        self, z_block: Iterable[str], h_block: Iterable[str]
    ) -> Tuple[int, int]:
        """Par de grados en los bloques z y h."""
        return self.degree_in(z_block), self.degree_in(h_block)

    def is_homogeneous_in(self, names: Iterable[str]) -> bool:
        idx = self._indices(names)
        degrees = {sum(m[i] for i in idx) for m, _ in self.term_list()}
        return len(degrees) <= 1

    def leading_monomial(self) -> Monomial:
        if not self._poly:
            return tuple(0 for _ in range(self.nvars))
        return self.term_list()[0][0]

    def leading_coefficient(self) -> int:
        if not self._poly:
            return 0
        return self.term_list()[0][1]

    def content(self) -> int:
        return int(self._poly.content()) if self._poly else 0

    def primitive(self) -> "MultiPoly":
        """Divide por el contenido y fija el coeficiente principal positivo."""
        if not self._poly:
            return self
        _, prim = self._poly.primitive()
        if prim.LC < 0:
            prim = -prim
        return MultiPoly(prim)

    def constant_term(self) -> int:
        zero = tuple(0 for _ in range(self.nvars))
        return int(self._poly.get(zero, 0))

    # Aritmética

    def _coerce(self, other: Union["MultiPoly", int]) -> PolyElement:
        if isinstance(other, MultiPoly):
            if other.gens != self.gens:
                raise VariableOrderMismatchError(self.gens, other.gens)
            return other._poly
        if isinstance(other, int):
            return self._poly.ring.ground_new(other)
        return NotImplemented  # type: ignore[return-value]

    def __add__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        return MultiPoly(self._poly + self._coerce(other))

    __radd__ = __add__

    def __sub__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        return MultiPoly(self._poly - self._coerce(other))

    def __rsub__(self, other: int) -> "MultiPoly":
        return MultiPoly(self._coerce(other) - self._poly)

    def __neg__(self) -> "MultiPoly":
        return MultiPoly(-self._poly)

    def __mul__(self, other: Union["MultiPoly", int]) -> "MultiPoly":
        return MultiPoly(self._poly * self._coerce(other))

    __rmul__ = __mul__

    def __pow__(self, exponent: int) -> "MultiPoly":
        if exponent < 0:
            raise ValueError("Exponente negativo")
        return MultiPoly(self._poly**exponent)

    def __eq__(self, other: object) -> bool:
        if isinstance(other, int):
            return bool(self._poly == other)
        if not isinstance(other, MultiPoly):
            return NotImplemented
        return self.gens == other.gens and self.terms() == other.terms()

    def __hash__(self) -> int:
        return hash((self.gens, tuple(self.term_list())))

    def __repr__(self) -> str:
        return f"MultiPoly({self.to_text()!r}, gens={self.gens})"

    def __str__(self) -> str:
        return self.to_text()

    # Evaluación y sustitución

    def evaluate(self, point: Sequence[int]) -> int:
        """
        Evalúa en un punto entero.

        Args:
            point: Un valor por variable, en el orden declarado

        Returns:
            int: Valor exacto
        """
        if len(point) != self.nvars:
            raise ArityMismatchError(self.nvars, len(point))
        values = [int(v) for v in point]
        total = 0
        for monom, coeff in self.term_list():
            term = coeff
            for value, exp in zip(values, monom):
                if exp:
                    term *= value**exp
            total += term
        return total

    def compose(
        self, substitution: Mapping[str, "MultiPoly"], target_gens: Sequence[str]
    ) -> "MultiPoly":
        """
        Sustituye cada variable por un polinomio en ``target_gens``.

        Las variables sin sustituto deben existir en ``target_gens`` y se
        conservan.
        """
        target_gens = tuple(target_gens)
        images: List[MultiPoly] = []
        for name in self.gens:
            image = substitution.get(name)
            if image is None:
                image = MultiPoly.variable(target_gens, name)
            elif image.gens != target_gens:
                raise VariableOrderMismatchError(target_gens, image.gens)
            images.append(image)

        ring = poly_ring(target_gens)
        powers: List[Dict[int, PolyElement]] = [{0: ring.one} for _ in images]
        result = ring.zero
        for monom, coeff in self.term_list():
            term = ring.ground_new(coeff)
            for i, exp in enumerate(monom):
                if exp:
                    cache = powers[i]
                    if exp not in cache:
                        cache[exp] = images[i]._poly**exp
                    term = term * cache[exp]
            result += term
        return MultiPoly(result)

    def specialize(self, values: Mapping[str, int]) -> "MultiPoly":
        """Fija algunas variables en valores enteros; el resultado omite esas variables."""
        remaining = tuple(g for g in self.gens if g not in values)
        idx = self._indices(values.keys())
        keep = [i for i in range(self.nvars) if i not in idx]
        collected: Dict[Monomial, int] = {}
        for monom, coeff in self.term_list():
            factor = coeff
            for i in idx:
                if monom[i]:
                    factor *= int(values[self.gens[i]]) ** monom[i]
            if factor:
                key = tuple(monom[i] for i in keep)
                collected[key] = collected.get(key, 0) + factor
        return MultiPoly.from_terms(remaining, collected)

    def coefficients_in(self, names: Sequence[str]) -> Dict[Monomial, "MultiPoly"]:
        """
        Coeficientes respecto del bloque ``names`` como polinomios en el resto.

        Args:
            names: Variables respecto de las que se extrae

        Returns:
            Dict: Exponentes en ``names`` -> coeficiente no nulo (orden grlex)
        """
        idx = self._indices(names)
        keep = [i for i in range(self.nvars) if i not in idx]
        remaining = tuple(self.gens[i] for i in keep)
        grouped: Dict[Monomial, Dict[Monomial, int]] = {}
        for monom, coeff in self.term_list():
            outer = tuple(monom[i] for i in idx)
            inner = tuple(monom[i] for i in keep)
            grouped.setdefault(outer, {})[inner] = coeff
        return {
            outer: MultiPoly.from_terms(remaining, inner)
            for outer, inner in grouped.items()
        }

    def embed(self, gens: Sequence[str]) -> "MultiPoly":
        """Reexpresa el polinomio en otro orden de variables que contenga las actuales."""
        gens = tuple(gens)
        if gens == self.gens:
            return self
        missing = [g for g in self.gens if g not in gens]
        if missing:
            raise VariableOrderMismatchError(gens, self.gens)
        positions = [gens.index(g) for g in self.gens]
        terms: Dict[Monomial, int] = {}
        for monom, coeff in self.term_list():
            target = [0] * len(gens)
            for pos, exp in zip(positions, monom):
                target[pos] = exp
            terms[tuple(target)] = coeff
        return MultiPoly.from_terms(gens, terms)

    def rename(self, mapping: Mapping[str, str]) -> "MultiPoly":
        """Cambia nombres de variables sin alterar el orden."""
        gens = tuple(mapping.get(g, g) for g in self.gens)
        return MultiPoly.from_terms(gens, self.terms())

    def drop_unused(self, keep_order: Optional[Sequence[str]] = None) -> "MultiPoly":
        """Elimina las variables que no aparecen."""
        used = {
            self.gens[i]
            for m, _ in self.term_list()
            for i, e in enumerate(m)
            if e
        }
        order = keep_order or self.gens
        return self._restrict(tuple(g for g in order if g in used))

    def _restrict(self, gens: Gens) -> "MultiPoly":
        idx = self._indices(gens)
        return MultiPoly.from_terms(
            gens, {tuple(m[i] for i in idx): c for m, c in self.term_list()}
        )

    def _indices(self, names: Iterable[str]) -> List[int]:
        gens = self.gens
        idx = []
        for name in names:
            if name not in gens:
                raise VariableOrderMismatchError(gens, (name,))
            idx.append(gens.index(name))
        return idx

    # Serialización

    def to_text(self) -> str:
        """
        Forma textual determinista ``coeff*var^e*...`` en orden grlex decreciente.

        Returns:
            str: Por ejemplo ``1*w1*w3 - 1*w2^2``; ``0`` para el polinomio cero
        """
        if not self._poly:
            return "0"
        gens = self.gens
        parts: List[str] = []
        for k, (monom, coeff) in enumerate(self.term_list()):
            factors = [str(abs(coeff))]
            for name, exp in zip(gens, monom):
                if exp == 1:
                    factors.append(name)
                elif exp > 1:
                    factors.append(f"{name}^{exp}")
            body = "*".join(factors)
            if k == 0:
                parts.append(body if coeff > 0 else f"-{body}")
            else:
                parts.append(f"{'+' if coeff > 0 else '-'} {body}")
        return " ".join(parts)


def _check_orders(p: MultiPoly, q: MultiPoly) -> None:
    if p.gens != q.gens:
        raise VariableOrderMismatchError(p.gens, q.gens)


def mp_mul(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """Producto exacto de dos polinomios con el mismo orden de variables."""
    _check_orders(p, q)
    return p * q


def mp_divide_exact(p: MultiPoly, q: MultiPoly) -> MultiPoly:
    """
    Cociente exacto ``p / q``.

    Args:
        p: Dividendo
        q: Divisor no nulo

    Returns:
        MultiPoly: r tal que p = q * r

    Raises:
        PolynomialDivisionByZeroError: Si q es cero
        NotDivisibleError: Si la división multivariada deja resto
    """
    _check_orders(p, q)
    if q.is_zero():
        raise PolynomialDivisionByZeroError("División por el polinomio cero")
    try:
        return MultiPoly(p.raw.exquo(q.raw))
    except ExactQuotientFailed:
        raise NotDivisibleError(p.to_text(), q.to_text())


def mp_eval(p: MultiPoly, point: Sequence[int]) -> int:
    """Valor exacto de ``p`` en ``point``."""
    return p.evaluate(point)


def mp_product(factors: Iterable[MultiPoly], gens: Sequence[str]) -> MultiPoly:
    """Producto de una lista (posiblemente vacía) de polinomios."""
    result = MultiPoly.one(gens)
    for factor in factors:
        result = mp_mul(result, factor)
    return result


def vandermonde(names: Sequence[str], gens: Sequence[str]) -> MultiPoly:
    """Producto ``prod_{i<j} (x_i - x_j)`` sobre las variables ``names``."""
    variables = [MultiPoly.variable(gens, name) for name in names]
    return mp_product(
        (
            variables[i] - variables[j]
            for i in range(len(variables))
            for j in range(i + 1, len(variables))
        ),
        gens,
    )
