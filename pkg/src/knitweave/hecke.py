"""The type-A Hecke algebra H_n over Z[z, z^-1].

H_n is the quotient of the braid-group algebra by sigma_i - sigma_i^-1 = z.
Elements are stored in the positive permutation-braid (PPB) basis {T_w}; the
negative permutation-braid (NPB) basis {U_w} is a view produced by
``convert``. T_w (resp. U_w) is the positive (resp. negative) braid realizing
the permutation w with the fewest crossings; U_w is defined operationally as
the image of the sign-negated reduced word of w.

Multiplication follows the package-wide composition convention (see
``braid``): appending a generator letter i sends the index w to s_i o w, with

    T_w . sigma_i = T_{s_i o w}                      if length increases,
    T_w . sigma_i = T_{s_i o w} + z T_w              otherwise,

and sigma_i^-1 = sigma_i - z applied termwise.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Mapping

from knitweave.braid import (
    BraidWord,
    Perm,
    coxeter_length,
    identity_perm,
    longest_element,
    reduced_word,
)
from knitweave.laurent import LaurentZ

__all__ = [
    "HeckeElement",
    "PPB",
    "NPB",
    "unit",
    "basis_element",
    "mul_generator",
    "expand_word",
    "multiply",
    "convert",
    "top_coeff",
    "render_element",
]

PPB = "PPB"
NPB = "NPB"

_Z = LaurentZ.term(1)


@dataclass(frozen=True)
class HeckeElement:
    """An element of H_n: a finite map from permutations to z-polynomials."""

    strands: int
    basis: str
    coeffs: Mapping[Perm, LaurentZ] = field(default_factory=dict)

    def __post_init__(self) -> None:
        if self.basis not in (PPB, NPB):
            raise ValueError(f"unknown basis tag {self.basis!r}")
        clean = {}
        for w, c in self.coeffs.items():
            if sorted(w) != list(range(1, self.strands + 1)):
                raise ValueError(f"{w} is not a permutation of 1..{self.strands}")
            if c:
                clean[tuple(w)] = c
        object.__setattr__(self, "coeffs", clean)

    def __bool__(self) -> bool:
        return bool(self.coeffs)

    def __eq__(self, other: object) -> bool:
        return (
            isinstance(other, HeckeElement)
            and self.strands == other.strands
            and self.basis == other.basis
            and self.coeffs == other.coeffs
        )

    def scaled(self, factor: LaurentZ) -> HeckeElement:
        return HeckeElement(
            self.strands, self.basis, {w: c * factor for w, c in self.coeffs.items()}
        )

    def __add__(self, other: HeckeElement) -> HeckeElement:
        if self.strands != other.strands or self.basis != other.basis:
            raise ValueError("can only add elements of the same algebra and basis")
        out = dict(self.coeffs)
        for w, c in other.coeffs.items():
            out[w] = out.get(w, LaurentZ.zero()) + c
        return HeckeElement(self.strands, self.basis, out)


def unit(n: int, basis: str = PPB) -> HeckeElement:
    return HeckeElement(n, basis, {identity_perm(n): LaurentZ.one()})


def basis_element(n: int, w: Perm, basis: str = PPB) -> HeckeElement:
    return HeckeElement(n, basis, {tuple(w): LaurentZ.one()})


def _swap_values(w: Perm, i: int) -> Perm:
    """One-line notation of s_i o w: swap the values i and i+1."""
    return tuple(i + 1 if x == i else i if x == i + 1 else x for x in w)


def mul_generator(x: HeckeElement, i: int, positive: bool = True) -> HeckeElement:
    """Right-multiply a PPB element by sigma_i (or its inverse)."""
    if x.basis != PPB:
        raise ValueError("mul_generator acts on PPB elements")
    if not 1 <= i <= x.strands - 1:
        raise ValueError(f"generator index {i} out of range for {x.strands} strands")
    out: dict[Perm, LaurentZ] = {}

    def add(w: Perm, c: LaurentZ) -> None:
        out[w] = out.get(w, LaurentZ.zero()) + c

    for w, c in x.coeffs.items():
        sw = _swap_values(w, i)
        length_up = w.index(i) < w.index(i + 1)
        add(sw, c)
        if length_up and not positive:
            add(w, -(_Z * c))
        elif not length_up and positive:
            add(w, _Z * c)
        # length down with a negative letter: the z-terms cancel exactly
    return HeckeElement(x.strands, PPB, out)


def expand_word(word: BraidWord) -> HeckeElement:
    """The image of a braid word in H_n, expanded in the PPB basis."""
    x = unit(word.strands)
    for g in word.letters:
        x = mul_generator(x, abs(g), g > 0)
    return x


def multiply(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Bilinear product of two PPB elements."""
    if x.basis != PPB or y.basis != PPB:
        raise ValueError("multiply acts on PPB elements")
    if x.strands != y.strands:
        raise ValueError("strand counts differ")
    total = HeckeElement(x.strands, PPB, {})
    for w, c in sorted(y.coeffs.items()):
        t = x
        for g in reduced_word(w).letters:
            t = mul_generator(t, g, True)
        total = total + t.scaled(c)
    return total


_NPB_IN_PPB_CACHE: dict[Perm, HeckeElement] = {}


def _npb_in_ppb(w: Perm) -> HeckeElement:
    """U_w expanded in the PPB basis (image of the all-negative reduced word)."""
    w = tuple(w)
    cached = _NPB_IN_PPB_CACHE.get(w)
    if cached is None:
        pos = reduced_word(w)
        cached = expand_word(BraidWord(len(w), tuple(-g for g in pos.letters)))
        _NPB_IN_PPB_CACHE[w] = cached
    return cached


def convert(x: HeckeElement, target: str) -> HeckeElement:
    """Re-express an element in the target basis.

    U_w = T_w + (strictly shorter T-terms), so PPB -> NPB is a triangular
    substitution peeled from the longest support element downward.
    """
    if target not in (PPB, NPB):
        raise ValueError(f"unknown basis tag {target!r}")
    if x.basis == target:
        return x
    if target == PPB:
        total = HeckeElement(x.strands, PPB, {})
        for w, c in sorted(x.coeffs.items()):
            total = total + _npb_in_ppb(w).scaled(c)
        return total
    work = dict(x.coeffs)
    out: dict[Perm, LaurentZ] = {}
    while True:
        support = [w for w, c in work.items() if c]
        if not support:
            break
        w = max(support, key=lambda p: (coxeter_length(p), p))
        c = work[w]
        out[w] = c
        # U_w has unit coefficient on T_w, so this zeroes work[w] exactly
        for u, d in _npb_in_ppb(w).coeffs.items():
            work[u] = work.get(u, LaurentZ.zero()) - c * d
    return HeckeElement(x.strands, NPB, out)


def top_coeff(x: HeckeElement) -> LaurentZ:
    """Coefficient of the longest element in whichever basis x is held."""
    return x.coeffs.get(longest_element(x.strands), LaurentZ.zero())


def render_element(x: HeckeElement) -> str:
    """One line per basis permutation, sorted by Coxeter length then lex."""
    if not x.coeffs:
        return "0"
    lines = []
    for w in sorted(x.coeffs, key=lambda p: (coxeter_length(p), p)):
        lines.append(f"{','.join(map(str, w))} : {x.coeffs[w]}")
    return "\n".join(lines)
