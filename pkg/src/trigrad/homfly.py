"""Independent HOMFLYPT oracle through the Hecke algebra of type A and a
Markov trace.

The braid-diagram normalisation F is pinned by: conjugation and braid-move
invariance, F(D sigma_n) = F(D), F(D sigma_n^{-1}) = -t^{-1}q^{-1} F(D), the
skein relation q^{-1} F(D sigma_i) - q F(D sigma_i^{-1}) = (q^{-1}-q) F(D),
and F(unknot) = t^{-1}/(q^{-1}-q).  The skein relation forces the quadratic
relation T_i^2 = (1-q^2) T_i + q^2 on the generator images, and the Markov
axioms force the trace parameters

    delta = (1 + t^{-1} q) / (1 - q^2),       z = 1/delta,

with F(D) = (t^{-1}/(q^{-1}-q)) * delta^{n-1} * trace(rho(D)).

The rescaling F~ = sqrt(alpha)^{w - s + 1} F with alpha = -t^{-1}q^{-1} is
invariant under all Markov moves; the half-integer alpha powers live in a
formal square root A.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction

from .algebra import LaurentQT, RationalQT
from .braid import BraidWord

Permutation = tuple[int, ...]


def perm_identity(n: int) -> Permutation:
    return tuple(range(n))


def perm_length(w: Permutation) -> int:
    n = len(w)
    return sum(
        1 for i in range(n) for j in range(i + 1, n) if w[i] > w[j]
    )


def perm_mul(p: Permutation, q: Permutation) -> Permutation:
    """(p o q)(i) = p[q[i]]."""
    return tuple(p[q[i]] for i in range(len(p)))


@dataclass(frozen=True)
class HeckeElement:
    n: int
    coeffs: tuple[tuple[Permutation, RationalQT], ...]

    def as_dict(self) -> dict[Permutation, RationalQT]:
        return dict(self.coeffs)

    @staticmethod
    def from_dict(n: int, d: dict[Permutation, RationalQT]) -> "HeckeElement":
        items = tuple(
            (w, c) for w, c in sorted(d.items()) if not c.is_zero()
        )
        return HeckeElement(n, items)

    @staticmethod
    def unit(n: int) -> "HeckeElement":
        return HeckeElement.from_dict(n, {perm_identity(n): RationalQT.one()})

    def __add__(self, other: "HeckeElement") -> "HeckeElement":
        d = self.as_dict()
        for w, c in other.coeffs:
            d[w] = d.get(w, RationalQT.zero()) + c
        return HeckeElement.from_dict(self.n, d)

    def scaled(self, c: RationalQT) -> "HeckeElement":
        return HeckeElement.from_dict(
            self.n, {w: v * c for w, v in self.coeffs}
        )

    def __eq__(self, other) -> bool:
        if not isinstance(other, HeckeElement):
            return NotImplemented
        if self.n != other.n:
            return False
        d1, d2 = self.as_dict(), other.as_dict()
        zero = RationalQT.zero()
        return all(
            d1.get(w, zero) == d2.get(w, zero) for w in set(d1) | set(d2)
        )


# T_i^2 = (1 - q^2) T_i + q^2;  T_i^{-1} = q^{-2} T_i + (1 - q^{-2})
_Q2 = RationalQT.term(2, 0)
_QM2 = RationalQT.term(-2, 0)
_ONE_MINUS_Q2 = RationalQT.one() - _Q2
_ONE_MINUS_QM2 = RationalQT.one() - _QM2


def _right_mul_gen(
    d: dict[Permutation, RationalQT], i: int, inverse: bool
) -> dict[Permutation, RationalQT]:
    """Right multiplication by T_{s_i}^{±1}; `i` is the 0-indexed position."""
    out: dict[Permutation, RationalQT] = {}

    def add(w, c):
        if w in out:
            out[w] = out[w] + c
        else:
            out[w] = c

    for w, c in d.items():
        ws = list(w)
        ws[i], ws[i + 1] = ws[i + 1], ws[i]
        ws = tuple(ws)
        length_up = w[i] < w[i + 1]
        if not inverse:
            if length_up:
                add(ws, c)
            else:
                add(w, c * _ONE_MINUS_Q2)
                add(ws, c * _Q2)
        else:
            # T_w (q^{-2} T_s + (1 - q^{-2}))
            add(w, c * _ONE_MINUS_QM2)
            if length_up:
                add(ws, c * _QM2)
            else:
                add(w, c * _QM2 * _ONE_MINUS_Q2)
                add(ws, c * _QM2 * _Q2)
    return {w: c for w, c in out.items() if not c.is_zero()}


def hecke_of_braid(b: BraidWord) -> HeckeElement:
    d = {perm_identity(b.strands): RationalQT.one()}
    for s in b.letters:
        d = _right_mul_gen(d, abs(s) - 1, s < 0)
    return HeckeElement.from_dict(b.strands, d)


def hecke_mul(x: HeckeElement, y: HeckeElement) -> HeckeElement:
    """Product, expanding y through reduced words of its permutations."""
    if x.n != y.n:
        raise ValueError("size mismatch")
    out: dict[Permutation, RationalQT] = {}
    for w, c in y.coeffs:
        d = {u: cu * c for u, cu in x.coeffs}
        for i in _reduced_word(w):
            d = _right_mul_gen(d, i, False)
        for u, cu in d.items():
            out[u] = out.get(u, RationalQT.zero()) + cu
    return HeckeElement.from_dict(x.n, out)


def _reduced_word(w: Permutation) -> list[int]:
    """A reduced word for w: sort the one-line notation by adjacent swaps
    (each swap at a descent drops the length by one), then reverse."""
    n = len(w)
    word = []
    cur = list(w)
    while True:
        for i in range(n - 1):
            if cur[i] > cur[i + 1]:
                cur[i], cur[i + 1] = cur[i + 1], cur[i]
                word.append(i)
                break
        else:
            break
    word.reverse()
    return word


@dataclass(frozen=True)
class TraceParams:
    delta: RationalQT
    z: RationalQT


def solve_trace_params() -> TraceParams:
    """delta = (1 + t^{-1}q)/(1 - q^2), z = 1/delta; the unique pair with
    delta*z = 1 and delta*(q^{-2} z + 1 - q^{-2}) = -t^{-1}q^{-1}."""
    num = LaurentQT({(0, 0): Fraction(1), (1, -1): Fraction(1)})
    den = LaurentQT({(0, 0): Fraction(1), (2, 0): Fraction(-1)})
    delta = RationalQT(num, den)
    return TraceParams(delta, delta.inverse())


_PARAMS = solve_trace_params()
_TRACE_MEMO: dict[tuple[int, Permutation], RationalQT] = {}


def _trace_basis(n: int, w: Permutation) -> RationalQT:
    """Compatible normalized Markov trace on the T-basis."""
    if n == 1:
        return RationalQT.one()
    key = (n, w)
    if key in _TRACE_MEMO:
        return _TRACE_MEMO[key]
    if w[n - 1] == n - 1:
        out = _trace_basis(n - 1, w[: n - 1])
        _TRACE_MEMO[key] = out
        return out
    # w = v . (s_{n-2} s_{n-3} ... s_k) with v fixing n-1; the trace rule
    # strips s_{n-2} at cost z, leaving v . (s_{n-3} ... s_k) in H_{n-1}
    k = w.index(n - 1)
    # u = s_{n-2} ... s_k : one-line [0..k-1, n-1, k, ..., n-2]
    u = tuple(list(range(k)) + [n - 1] + list(range(k, n - 1)))
    uinv = [0] * n
    for i, x in enumerate(u):
        uinv[x] = i
    v = perm_mul(w, tuple(uinv))
    assert v[n - 1] == n - 1
    d = {v[: n - 1]: RationalQT.one()}
    for i in range(n - 3, k - 1, -1):
        d = _right_mul_gen(d, i, False)
    out = RationalQT.zero()
    for vv, c in d.items():
        out = out + c * _trace_basis(n - 1, vv)
    out = out * _PARAMS.z
    _TRACE_MEMO[key] = out
    return out


def ocneanu_trace(e: HeckeElement) -> RationalQT:
    out = RationalQT.zero()
    for w, c in e.coeffs:
        out = out + c * _trace_basis(e.n, w)
    return out


def unknot_value() -> RationalQT:
    """t^{-1} / (q^{-1} - q)."""
    return RationalQT(
        LaurentQT.term(0, -1),
        LaurentQT({(-1, 0): Fraction(1), (1, 0): Fraction(-1)}),
    )


def homfly_F(b: BraidWord) -> RationalQT:
    tr = ocneanu_trace(hecke_of_braid(b))
    return unknot_value() * _PARAMS.delta ** (b.strands - 1) * tr


ALPHA = RationalQT.term(-1, -1, -1)  # -t^{-1} q^{-1}


@dataclass(frozen=True)
class SqrtAlphaQT:
    """value * A^odd with A^2 = alpha = -t^{-1}q^{-1}."""

    odd: int
    value: RationalQT

    def __eq__(self, other) -> bool:
        if not isinstance(other, SqrtAlphaQT):
            return NotImplemented
        if self.value.is_zero() and other.value.is_zero():
            return True
        return self.odd == other.odd and self.value == other.value

    def mul_A(self, power: int = 1) -> "SqrtAlphaQT":
        odd, value = self.odd, self.value
        if power >= 0:
            for _ in range(power):
                if odd:
                    odd, value = 0, value * ALPHA
                else:
                    odd = 1
        else:
            for _ in range(-power):
                if odd:
                    odd = 0
                else:
                    odd, value = 1, value * ALPHA.inverse()
        return SqrtAlphaQT(odd, value)

    def scaled(self, c: RationalQT) -> "SqrtAlphaQT":
        return SqrtAlphaQT(self.odd, self.value * c)

    def __sub__(self, other: "SqrtAlphaQT") -> "SqrtAlphaQT":
        if self.value.is_zero():
            return SqrtAlphaQT(other.odd, -other.value)
        if other.value.is_zero():
            return self
        if self.odd != other.odd:
            raise ValueError("mixed half-integer powers do not combine")
        return SqrtAlphaQT(self.odd, self.value - other.value)


def homfly_F_tilde(b: BraidWord) -> SqrtAlphaQT:
    e = b.positive_count() - b.negative_count() - b.strands + 1
    m, r = divmod(e, 2)
    return SqrtAlphaQT(r, homfly_F(b) * ALPHA ** m)
