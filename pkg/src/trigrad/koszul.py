"""Koszul matrices: rows (a_i, b_i) of graded polynomials, and the calculus
of elementary row transformations, variable exclusion, a-aggregation and
stripping, dualization, and the Upsilon factorization.

Grading convention: the generator of R{n1,n2} sits in bidegree (n1,n2); a row
with middle shift s realizes R --left--> R{s} --right--> R, so the
differential has bidegree (1,1) exactly when

    s = bidegree(right) - (1,1) = (1,1) - bidegree(left)

(both constraints when both entries are nonzero; left*right must then be
homogeneous of bidegree (2,2)).
"""

from __future__ import annotations

from dataclasses import dataclass, replace

from .algebra import (
    BIDEG_D,
    BIDEG_ZERO,
    Bidegree,
    PolyRing,
    Polynomial,
)


class GradingError(ValueError):
    """A row or operation that violates the middle-shift law."""


@dataclass(frozen=True)
class KoszulRow:
    left: Polynomial
    right: Polynomial
    shift: Bidegree

    def validate(self):
        if not self.right.is_zero():
            d = self.right.homogeneous_bidegree()
            if d is None or d - BIDEG_D != self.shift:
                raise GradingError(
                    f"right entry {self.right} incompatible with shift {self.shift}"
                )
        if not self.left.is_zero():
            d = self.left.homogeneous_bidegree()
            if d is None or BIDEG_D - d != self.shift:
                raise GradingError(
                    f"left entry {self.left} incompatible with shift {self.shift}"
                )


def make_row(left: Polynomial, right: Polynomial) -> KoszulRow:
    """Build a row, inferring the shift from whichever entry is nonzero."""
    if not right.is_zero():
        d = right.homogeneous_bidegree()
        if d is None:
            raise GradingError(f"inhomogeneous right entry {right}")
        shift = d - BIDEG_D
    elif not left.is_zero():
        d = left.homogeneous_bidegree()
        if d is None:
            raise GradingError(f"inhomogeneous left entry {left}")
        shift = BIDEG_D - d
    else:
        raise GradingError("cannot infer the shift of a (0, 0) row")
    row = KoszulRow(left, right, shift)
    row.validate()
    return row


@dataclass(frozen=True)
class KoszulMatrix:
    ring: PolyRing
    rows: tuple[KoszulRow, ...]
    external_signs: tuple[tuple[str, int], ...] = ()
    global_shift: Bidegree = BIDEG_ZERO
    global_parity: int = 0

    def potential(self) -> Polynomial:
        w = self.ring.zero()
        for r in self.rows:
            w = w + r.left * r.right
        return w

    def expected_potential(self) -> Polynomial:
        w = self.ring.zero()
        a = self.ring.var("a")
        for name, sign in self.external_signs:
            w = w + a * self.ring.var(name) * sign
        return w

    def is_closed(self) -> bool:
        return not self.external_signs

    def validate(self):
        for r in self.rows:
            r.validate()
        if self.external_signs or any(
            not r.left.is_zero() or not r.right.is_zero() for r in self.rows
        ):
            if self.potential() != self.expected_potential():
                raise GradingError("potential does not match external variables")

    def dump(self) -> str:
        """Debug format: one row per line, 'left | right | shift'."""
        lines = [f"{r.left} | {r.right} | {r.shift}" for r in self.rows]
        if self.external_signs:
            ext = " ".join(
                f"{'+' if s > 0 else '-'}{n}" for n, s in self.external_signs
            )
            lines.append(f"externals: {ext}")
        if self.global_shift != BIDEG_ZERO or self.global_parity:
            lines.append(
                f"global: {self.global_shift} parity {self.global_parity}"
            )
        return "\n".join(lines)


# ---------------------------------------------------------------------------
# Graphs -> Koszul matrices
# ---------------------------------------------------------------------------


@dataclass(frozen=True)
class ResolutionGraph:
    """Arcs and wide edges over named marks.  Arcs are (tail, head): the arc
    is oriented tail -> head and contributes the row (a, head - tail).  Wide
    edges list (x1, x2, x3, x4) with x1, x2 outgoing and x3, x4 incoming.
    External marks have exactly one incidence; their sign is +1 where the
    diagram flows out (arc heads, wide-edge outgoing), -1 where it flows in.
    """

    var_names: tuple[str, ...]
    arcs: tuple[tuple[str, str], ...] = ()
    wides: tuple[tuple[str, str, str, str], ...] = ()

    def incidences(self) -> dict[str, list[int]]:
        """name -> list of +1 (flows out of the graph piece at that mark,
        i.e. the mark receives the flow) / -1 entries."""
        inc: dict[str, list[int]] = {n: [] for n in self.var_names}
        for tail, head in self.arcs:
            inc[tail].append(-1)
            inc[head].append(+1)
        for x1, x2, x3, x4 in self.wides:
            inc[x1].append(+1)
            inc[x2].append(+1)
            inc[x3].append(-1)
            inc[x4].append(-1)
        return inc

    def external_signs(self) -> tuple[tuple[str, int], ...]:
        out = []
        for name, signs in self.incidences().items():
            if len(signs) == 1:
                out.append((name, signs[0]))
            elif len(signs) == 2:
                if sum(signs) != 0:
                    raise ValueError(f"mark {name} is not a through-point")
            elif len(signs) != 0:
                raise ValueError(f"mark {name} has {len(signs)} incidences")
        return tuple(out)


def koszul_of_graph(g: ResolutionGraph) -> KoszulMatrix:
    ring = PolyRing(("a",) + g.var_names)
    a = ring.var("a")
    rows = []
    for tail, head in g.arcs:
        rows.append(make_row(a, ring.var(head) - ring.var(tail)))
    for x1, x2, x3, x4 in g.wides:
        v1, v2, v3, v4 = (ring.var(n) for n in (x1, x2, x3, x4))
        rows.append(make_row(a, v1 + v2 - v3 - v4))
        rows.append(make_row(ring.zero(), v1 * v2 - v3 * v4))
    m = KoszulMatrix(ring, tuple(rows), g.external_signs())
    m.validate()
    return m


def build_upsilon() -> KoszulMatrix:
    """The three-row factorization with elementary-symmetric entries."""
    r = PolyRing(("a", "x1", "x2", "x3", "x4", "x5", "x6"))
    x = {i: r.var(f"x{i}") for i in range(1, 7)}
    e1 = x[1] + x[2] + x[3] - x[4] - x[5] - x[6]
    e2 = (
        x[1] * x[2] + x[1] * x[3] + x[2] * x[3]
        - x[4] * x[5] - x[4] * x[6] - x[5] * x[6]
    )
    e3 = x[1] * x[2] * x[3] - x[4] * x[5] * x[6]
    rows = (
        make_row(r.var("a"), e1),
        make_row(r.zero(), e2),
        make_row(r.zero(), e3),
    )
    ext = tuple((f"x{i}", 1) for i in (1, 2, 3)) + tuple(
        (f"x{i}", -1) for i in (4, 5, 6)
    )
    m = KoszulMatrix(r, rows, ext)
    m.validate()
    return m


# ---------------------------------------------------------------------------
# Row operations
# ---------------------------------------------------------------------------


def row_op(m: KoszulMatrix, i: int, j: int, lam: Polynomial) -> KoszulMatrix:
    """[ij]_lambda: (a_i, b_i; a_j, b_j) -> (a_i, b_i + λ b_j; a_j - λ a_i, b_j).

    An isomorphism of factorizations; the potential is unchanged.
    """
    if i == j:
        raise ValueError("row indices must differ")
    ri, rj = m.rows[i], m.rows[j]
    new_bi = ri.right + lam * rj.right
    new_aj = rj.left - lam * ri.left
    new_ri = KoszulRow(ri.left, new_bi, ri.shift)
    new_rj = KoszulRow(new_aj, rj.right, rj.shift)
    new_ri.validate()
    new_rj.validate()
    rows = list(m.rows)
    rows[i], rows[j] = new_ri, new_rj
    out = replace(m, rows=tuple(rows))
    if out.potential() != m.potential():
        raise GradingError("row_op changed the potential")
    return out


def exclude_variable(m: KoszulMatrix, row_index: int, var: str) -> KoszulMatrix:
    """Remove a row (0, c·var - c·mu) and substitute mu for `var` everywhere,
    dropping `var` from the ring.  Valid whenever the potential does not
    involve `var` (so in particular `var` is not external) and mu is free of
    `var`.  A chain homotopy equivalence."""
    row = m.rows[row_index]
    if not row.left.is_zero():
        raise ValueError("row has a nonzero left entry")
    c = row.right.linear_coefficient(var)
    if c == 0:
        raise ValueError(f"row does not involve {var!r} linearly")
    ring = m.ring
    mu = (ring.var(var) * c - row.right) * (1 / c)
    if mu.contains(var):
        raise ValueError(f"{var!r} does not split off linearly")
    if any(name == var for name, _ in m.external_signs):
        raise ValueError(f"{var!r} is external")
    if m.potential().contains(var):
        raise ValueError(f"potential involves {var!r}")
    newring = ring.without(var)
    rows = []
    for idx, r in enumerate(m.rows):
        if idx == row_index:
            continue
        left = r.left.substitute(var, mu).drop_variable(var)
        right = r.right.substitute(var, mu).drop_variable(var)
        nr = KoszulRow(left, right, r.shift)
        nr.validate()
        rows.append(nr)
    return replace(m, ring=newring, rows=tuple(rows))


def aggregate_a(m: KoszulMatrix) -> KoszulMatrix:
    """Chain of [1p]_1 operations collecting `a` into the first a-row, whose
    right entry becomes the signed sum of external variables (0 for closed
    graphs).  Requires every row to be (a, ·) or (0, ·)."""
    a = m.ring.var("a")
    zero = m.ring.zero()
    a_rows = []
    for idx, r in enumerate(m.rows):
        if r.left == a:
            a_rows.append(idx)
        elif r.left != zero:
            raise ValueError(f"row {idx} has left entry {r.left}, not a or 0")
    if not a_rows:
        return m
    pivot = a_rows[0]
    one = m.ring.one()
    for p in a_rows[1:]:
        m = row_op(m, pivot, p, one)
    return m


def strip_a(m: KoszulMatrix) -> KoszulMatrix:
    """Remove the (a, 0) row together with the variable a.  Only valid for
    closed matrices where a occurs in no other row.  The surviving generator
    of that row sits in its middle shift, so the global shift gains it and
    the parity flips."""
    if not m.is_closed():
        raise ValueError("strip_a needs a closed matrix")
    a = m.ring.var("a")
    pivot = None
    for idx, r in enumerate(m.rows):
        if r.left == a and r.right.is_zero():
            pivot = idx
            break
    if pivot is None:
        raise ValueError("no (a, 0) row; aggregate first")
    for idx, r in enumerate(m.rows):
        if idx != pivot and (r.left.contains("a") or r.right.contains("a")):
            raise ValueError(f"a occurs in row {idx}")
    newring = m.ring.without("a")
    rows = []
    for idx, r in enumerate(m.rows):
        if idx == pivot:
            continue
        nr = KoszulRow(
            r.left.drop_variable("a"), r.right.drop_variable("a"), r.shift
        )
        rows.append(nr)
    return replace(
        m,
        ring=newring,
        rows=tuple(rows),
        global_shift=m.global_shift + m.rows[pivot].shift,
        global_parity=(m.global_parity + 1) % 2,
    )


def dualize(m: KoszulMatrix) -> KoszulMatrix:
    """Row (a_i, b_i){s} -> (b_i, -a_i){-s}; the potential changes sign."""
    rows = []
    for r in m.rows:
        nr = KoszulRow(r.right, -r.left, -r.shift)
        nr.validate()
        rows.append(nr)
    ext = tuple((n, -s) for n, s in m.external_signs)
    return replace(
        m,
        rows=tuple(rows),
        external_signs=ext,
        global_shift=-m.global_shift,
    )


def matrix_to_ring(m: KoszulMatrix, ring: PolyRing) -> KoszulMatrix:
    """Reinterpret all entries over a larger ring (same variable names plus
    possibly new ones)."""
    rows = tuple(
        KoszulRow(r.left.map_to_ring(ring), r.right.map_to_ring(ring), r.shift)
        for r in m.rows
    )
    return replace(m, ring=ring, rows=rows)


def tensor_matrices(m1: KoszulMatrix, m2: KoszulMatrix) -> KoszulMatrix:
    """Concatenate rows over a common ring; potentials and shifts add."""
    if m1.ring.names != m2.ring.names:
        raise ValueError("tensor_matrices needs a common ring")
    ext: dict[str, int] = {}
    for n, s in m1.external_signs + m2.external_signs:
        ext[n] = ext.get(n, 0) + s
    return KoszulMatrix(
        m1.ring,
        m1.rows + m2.rows,
        tuple((n, s) for n, s in ext.items() if s != 0),
        m1.global_shift + m2.global_shift,
        (m1.global_parity + m2.global_parity) % 2,
    )


def exclude_all(
    m: KoszulMatrix, protect: frozenset[str] = frozenset()
) -> tuple[KoszulMatrix, list[tuple[str, Polynomial]]]:
    """Greedy exclusion: repeatedly remove rows (0, ±(y - mu)) with y linear
    of the right degree, not protected, and absent from the potential.
    Returns the reduced matrix and the substitution chain (over the ring
    current at each step)."""
    chain: list[tuple[str, Polynomial]] = []
    while True:
        w = m.potential()
        found = None
        for idx, r in enumerate(m.rows):
            if not r.left.is_zero() or r.right.is_zero():
                continue
            for var in m.ring.names:
                c = r.right.linear_coefficient(var)
                if c == 0 or var in protect:
                    continue
                if r.right.homogeneous_bidegree() != m.ring.var_bidegree(var):
                    continue
                mu = (m.ring.var(var) * c - r.right) * (1 / c)
                if mu.contains(var) or w.contains(var):
                    continue
                found = (idx, var, mu)
                break
            if found:
                break
        if not found:
            return m, chain
        idx, var, mu = found
        chain.append((var, mu))
        m = exclude_variable(m, idx, var)
