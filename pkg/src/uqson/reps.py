"""Irreducible representations at roots of unity built from tableau data.

The basis of the k^N-dimensional space is labelled by tableaux whose variable
entries range cyclically over k values above the h parameters; operators for
the two generator families act by shifting one tableau entry up or down (mod
k) with coefficients that are ratios of q-brackets of l-coordinates, plus a
diagonal term for the even family. Matrix columns are indexed by the source
tableau.
"""

from __future__ import annotations

import cmath
import random
from dataclasses import dataclass
from itertools import product

import numpy as np

from .coeffring import RootOfUnity, qbracket_numeric, qpow_complex
from .errors import (
    DegenerateParameter,
    DimensionMismatch,
    IndexOutOfRange,
    ParameterSamplingError,
    RankMismatch,
    TopRowShift,
)
from .pbw.verify import defining_relation_instances

# denominators with magnitude below this are treated as vanished
_ZERO_TOL = 1e-12


def variable_slots(n):
    """Variable tableau positions (i, s): rows s = n-1 down to 2, i ascending."""
    if not isinstance(n, int) or n < 3:
        raise RankMismatch(f"rank must be an integer >= 3, got {n!r}")
    return tuple((i, s) for s in range(n - 1, 1, -1) for i in range(1, s // 2 + 1))


def num_positive_roots(n):
    """N = sum of floor(s/2) for s = 2..n-1; the representation dimension is k^N."""
    return len(variable_slots(n))


def parameter_count(n):
    return n * (n - 1) // 2


def _as_complex(value, what):
    z = complex(value)
    if not (cmath.isfinite(z)):
        raise ValueError(f"{what} must be finite, got {value!r}")
    return z


@dataclass(frozen=True)
class ParamsOmega:
    """Representation parameters: top row, h shifts, c scalars, root order.

    The constructor validates structure only (index ranges, counts, nonzero
    c); genericity of the h values is a separate check (assert_generic) so
    that deliberately degenerate constructions remain expressible.
    """

    n: int
    root: RootOfUnity
    m_top: tuple
    h: dict
    c: dict

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 3:
            raise RankMismatch(f"rank must be an integer >= 3, got {self.n!r}")
        if not isinstance(self.root, RootOfUnity):
            raise TypeError("root must be a RootOfUnity")
        object.__setattr__(
            self, "m_top",
            tuple(_as_complex(v, "m_top entry") for v in self.m_top),
        )
        if len(self.m_top) != self.n // 2:
            raise ValueError(
                f"m_top needs {self.n // 2} entries for n={self.n}, got {len(self.m_top)}"
            )
        slots = set(variable_slots(self.n))
        for name, table in (("h", self.h), ("c", self.c)):
            keys = set(table)
            if keys != slots:
                missing = sorted(slots - keys)
                extra = sorted(keys - slots)
                raise ValueError(
                    f"{name} slots mismatch: missing {missing}, unexpected {extra}"
                )
        object.__setattr__(
            self, "h", {k: _as_complex(v, f"h{k}") for k, v in self.h.items()}
        )
        c_clean = {}
        for k, v in self.c.items():
            z = _as_complex(v, f"c{k}")
            if abs(z) <= _ZERO_TOL:
                raise DegenerateParameter(f"c{k} must be nonzero")
            c_clean[k] = z
        object.__setattr__(self, "c", c_clean)
        total = len(self.m_top) + len(self.h) + len(self.c)
        assert total == parameter_count(self.n), "parameter inventory broken"

    @property
    def order_k(self):
        return self.root.order

    def dimension(self):
        return self.order_k ** num_positive_roots(self.n)


@dataclass(frozen=True)
class Tableau:
    """One basis label: integer offsets above h, aligned with variable_slots."""

    n: int
    k: int
    offsets: tuple

    def __post_init__(self):
        slots = variable_slots(self.n)
        if len(self.offsets) != len(slots):
            raise ValueError(
                f"need {len(slots)} offsets for n={self.n}, got {len(self.offsets)}"
            )
        for off in self.offsets:
            if not isinstance(off, int) or not (0 <= off < self.k):
                raise ValueError(f"offset {off!r} outside 0..{self.k - 1}")


def enumerate_tableaux(omega):
    """All k^N tableaux in lexicographic offset order (first slot varies slowest)."""
    slots = variable_slots(omega.n)
    k = omega.order_k
    return [
        Tableau(omega.n, k, offs) for offs in product(range(k), repeat=len(slots))
    ]


def tableau_index(tab):
    """Position of the tableau in enumerate_tableaux order."""
    idx = 0
    for off in tab.offsets:
        idx = idx * tab.k + off
    return idx


def _slot_pos(n, i, s):
    slots = variable_slots(n)
    try:
        return slots.index((i, s))
    except ValueError:
        raise IndexOutOfRange(f"no variable entry at (i={i}, s={s}) for n={n}") from None


def m_value(omega, tab, i, s):
    """Entry m_{i,s}: fixed top row for s=n, h + offset otherwise."""
    if s == omega.n:
        if not (1 <= i <= omega.n // 2):
            raise IndexOutOfRange(f"top row has no entry i={i}")
        return omega.m_top[i - 1]
    pos = _slot_pos(omega.n, i, s)
    return omega.h[(i, s)] + tab.offsets[pos]


def l_value(omega, tab, i, s):
    """l-coordinate: m + p - i for s = 2p, m + p - i + 1 for s = 2p+1."""
    m = m_value(omega, tab, i, s)
    if s % 2 == 0:
        return m + s // 2 - i
    return m + (s - 1) // 2 - i + 1


def l_coords(omega, tab):
    """All l-coordinates of a tableau as {(i, s): complex}, top row included."""
    out = {}
    for s in range(2, omega.n + 1):
        for i in range(1, s // 2 + 1):
            out[(i, s)] = l_value(omega, tab, i, s)
    return out


def shift_tableau(omega, tab, i, s, direction):
    """Tableau with m_{i,s} shifted by +-1, wrapping offsets cyclically mod k."""
    if s == omega.n:
        raise TopRowShift("the top row is fixed and cannot be shifted")
    if direction not in (1, -1):
        raise ValueError(f"direction must be +1 or -1, got {direction!r}")
    pos = _slot_pos(omega.n, i, s)
    offs = list(tab.offsets)
    offs[pos] = (offs[pos] + direction) % tab.k
    return Tableau(tab.n, tab.k, tuple(offs))


# -- coefficient evaluation --------------------------------------------------


def _bracket(omega, x):
    return qbracket_numeric(x, omega.root)


def _sqrt_bracket(omega, x):
    """Coherent square root of the bracket [x]: principal branch, keyed by the
    argument so every occurrence of the same factor shares one branch."""
    return cmath.sqrt(qbracket_numeric(x, omega.root))


def _sqrt_bracket_checked(omega, x, label):
    v = qbracket_numeric(x, omega.root)
    if abs(v) < _ZERO_TOL:
        raise DegenerateParameter(f"vanishing denominator bracket [{label}] = [{x}]")
    return cmath.sqrt(v)


def _den_factor(omega, x, label):
    v = _bracket(omega, x)
    if abs(v) < _ZERO_TOL:
        raise DegenerateParameter(f"vanishing denominator bracket [{label}] = [{x}]")
    return v


def coeff_A(omega, tab, j, p):
    """Shift coefficient of the odd-family operator: square root of
      prod_{i=1..p}   [l_{i,2p+1}+l_{j,2p}] [l_{i,2p+1}-l_{j,2p}-1]
    * prod_{i=1..p-1} [l_{i,2p-1}+l_{j,2p}] [l_{i,2p-1}-l_{j,2p}-1]
    / prod_{i != j, i<=p} [l_{i,2p}+l_{j,2p}] [l_{i,2p}-l_{j,2p}]
                          [l_{i,2p}+l_{j,2p}+1] [l_{i,2p}-l_{j,2p}-1].

    The root is taken factor by factor, not of the assembled quotient: the
    defining relations close only when the same bracket factor carries the
    same root wherever it appears across the shift and diagonal operators.
    Each difference factor is first put in a canonical orientation (higher
    row first; within a row, lower index first); a reversed factor [x] is
    evaluated as i*sqrt([-x]), which squares back to [x]. Numerator zeros
    are legitimate (the matrix entry vanishes); denominator zeros mean the
    parameters are degenerate.
    """
    if not (1 <= j <= p):
        raise IndexOutOfRange(f"coeff_A needs 1 <= j <= p, got j={j}, p={p}")
    if 2 * p + 1 > omega.n:
        raise IndexOutOfRange(f"row {2 * p + 1} exceeds rank {omega.n}")
    lj = l_value(omega, tab, j, 2 * p)
    num = 1 + 0j
    for i in range(1, p + 1):
        li = l_value(omega, tab, i, 2 * p + 1)
        num *= _sqrt_bracket(omega, li + lj) * _sqrt_bracket(omega, li - lj - 1)
    for i in range(1, p):
        # row 2p-1 sits below row 2p: reorient the difference
        li = l_value(omega, tab, i, 2 * p - 1)
        num *= _sqrt_bracket(omega, li + lj) * (1j * _sqrt_bracket(omega, lj - li + 1))
    den = 1 + 0j
    for i in range(1, p + 1):
        if i == j:
            continue
        li = l_value(omega, tab, i, 2 * p)
        row = 2 * p
        den *= _sqrt_bracket_checked(omega, li + lj, f"l_{i},{row}+l_{j},{row}")
        den *= _sqrt_bracket_checked(omega, li + lj + 1, f"l_{i},{row}+l_{j},{row}+1")
        if i < j:
            den *= _sqrt_bracket_checked(omega, li - lj, f"l_{i},{row}-l_{j},{row}")
            den *= _sqrt_bracket_checked(omega, li - lj - 1, f"l_{i},{row}-l_{j},{row}-1")
        else:
            den *= 1j * _sqrt_bracket_checked(omega, lj - li, f"l_{j},{row}-l_{i},{row}")
            den *= 1j * _sqrt_bracket_checked(
                omega, lj - li + 1, f"l_{j},{row}-l_{i},{row}+1"
            )
    return num / den


def coeff_B(omega, tab, j, p):
    """Shift coefficient of the even-family operator: square root of
      prod_{i=1..p}   [l_{i,2p}+l_{j,2p-1}] [l_{i,2p}-l_{j,2p-1}]
    * prod_{i=1..p-1} [l_{i,2p-2}+l_{j,2p-1}] [l_{i,2p-2}-l_{j,2p-1}]
    / prod_{i != j, i<=p-1} [l_{i,2p-1}+l_{j,2p-1}] [l_{i,2p-1}-l_{j,2p-1}]
                            [l_{i,2p-1}+l_{j,2p-1}-1] [l_{i,2p-1}-l_{j,2p-1}-1].

    Same factor-by-factor coherent root and orientation rules as coeff_A.
    """
    if not (1 <= j <= p - 1):
        raise IndexOutOfRange(f"coeff_B needs 1 <= j <= p-1, got j={j}, p={p}")
    if 2 * p > omega.n:
        raise IndexOutOfRange(f"row {2 * p} exceeds rank {omega.n}")
    lj = l_value(omega, tab, j, 2 * p - 1)
    num = 1 + 0j
    for i in range(1, p + 1):
        li = l_value(omega, tab, i, 2 * p)
        num *= _sqrt_bracket(omega, li + lj) * _sqrt_bracket(omega, li - lj)
    for i in range(1, p):
        # row 2p-2 sits below row 2p-1: reorient the difference
        li = l_value(omega, tab, i, 2 * p - 2)
        num *= _sqrt_bracket(omega, li + lj) * (1j * _sqrt_bracket(omega, lj - li))
    den = 1 + 0j
    for i in range(1, p):
        if i == j:
            continue
        li = l_value(omega, tab, i, 2 * p - 1)
        row = 2 * p - 1
        den *= _sqrt_bracket_checked(omega, li + lj, f"l_{i},{row}+l_{j},{row}")
        den *= _sqrt_bracket_checked(omega, li + lj - 1, f"l_{i},{row}+l_{j},{row}-1")
        if i < j:
            den *= _sqrt_bracket_checked(omega, li - lj, f"l_{i},{row}-l_{j},{row}")
            den *= _sqrt_bracket_checked(omega, li - lj - 1, f"l_{i},{row}-l_{j},{row}-1")
        else:
            den *= 1j * _sqrt_bracket_checked(omega, lj - li, f"l_{j},{row}-l_{i},{row}")
            den *= 1j * _sqrt_bracket_checked(
                omega, lj - li + 1, f"l_{j},{row}-l_{i},{row}+1"
            )
    return num / den


def coeff_C(omega, tab, p):
    """Diagonal coefficient of the even-family operator:
    prod_{s=1..p} [l_{s,2p}] * prod_{s=1..p-1} [l_{s,2p-2}]
    / prod_{s=1..p-1} [l_{s,2p-1}] [l_{s,2p-1}-1].
    """
    if 2 * p > omega.n:
        raise IndexOutOfRange(f"row {2 * p} exceeds rank {omega.n}")
    num = 1 + 0j
    for s in range(1, p + 1):
        num *= _bracket(omega, l_value(omega, tab, s, 2 * p))
    for s in range(1, p):
        num *= _bracket(omega, l_value(omega, tab, s, 2 * p - 2))
    den = 1 + 0j
    for s in range(1, p):
        ls = l_value(omega, tab, s, 2 * p - 1)
        den *= _den_factor(omega, ls, f"l_{s},{2 * p - 1}")
        den *= _den_factor(omega, ls - 1, f"l_{s},{2 * p - 1}-1")
    return num / den


# -- operators ----------------------------------------------------------------


@dataclass(frozen=True)
class SparseOperator:
    """One representation matrix as sorted (row, col, value) triples."""

    name: str
    dim: int
    entries: tuple

    def to_dense(self):
        m = np.zeros((self.dim, self.dim), dtype=np.complex128)
        for r, c, v in self.entries:
            m[r, c] = v
        return m

    def to_csr(self):
        from scipy.sparse import csr_matrix

        if not self.entries:
            return csr_matrix((self.dim, self.dim), dtype=np.complex128)
        rows, cols, vals = zip(*self.entries)
        return csr_matrix(
            (np.array(vals, dtype=np.complex128), (rows, cols)),
            shape=(self.dim, self.dim),
        )

    def max_column_nonzeros(self):
        counts = {}
        for _, c, _ in self.entries:
            counts[c] = counts.get(c, 0) + 1
        return max(counts.values(), default=0)


def _assemble(name, dim, cells):
    entries = tuple(
        (r, c, v) for (r, c), v in sorted(cells.items()) if v != 0
    )
    return SparseOperator(name, dim, entries)


def operator_odd(omega, p):
    """Matrix of the generator pairing rows 2p+1 and 2p (shift-only action)."""
    if 2 * p + 1 > omega.n:
        raise IndexOutOfRange(f"operator_odd needs 2p+1 <= n, got p={p}, n={omega.n}")
    tabs = enumerate_tableaux(omega)
    dim = len(tabs)
    cells = {}
    for col, tab in enumerate(tabs):
        for j in range(1, p + 1):
            lj = l_value(omega, tab, j, 2 * p)
            den = qpow_complex(lj, omega.root) + qpow_complex(-lj, omega.root)
            if abs(den) < _ZERO_TOL:
                raise DegenerateParameter(
                    f"vanishing denominator q^l+q^-l at l_{j},{2 * p} = {lj}"
                )
            cj = omega.c[(j, 2 * p)]
            up = shift_tableau(omega, tab, j, 2 * p, +1)
            val = cj * coeff_A(omega, tab, j, p) / den
            if val != 0:
                key = (tableau_index(up), col)
                cells[key] = cells.get(key, 0) + val
            down = shift_tableau(omega, tab, j, 2 * p, -1)
            val = -coeff_A(omega, down, j, p) / (cj * den)
            if val != 0:
                key = (tableau_index(down), col)
                cells[key] = cells.get(key, 0) + val
    return _assemble(f"I{2 * p + 1}{2 * p}", dim, cells)


def operator_even(omega, p):
    """Matrix of the generator pairing rows 2p and 2p-1 (shifts plus diagonal)."""
    if 2 * p > omega.n:
        raise IndexOutOfRange(f"operator_even needs 2p <= n, got p={p}, n={omega.n}")
    tabs = enumerate_tableaux(omega)
    dim = len(tabs)
    cells = {}
    for col, tab in enumerate(tabs):
        for j in range(1, p):
            lj = l_value(omega, tab, j, 2 * p - 1)
            shared = _den_factor(omega, 2 * lj - 1, f"2l_{j},{2 * p - 1}-1")
            den_up = shared * _den_factor(omega, lj, f"l_{j},{2 * p - 1}")
            den_down = shared * _den_factor(omega, lj - 1, f"l_{j},{2 * p - 1}-1")
            cj = omega.c[(j, 2 * p - 1)]
            up = shift_tableau(omega, tab, j, 2 * p - 1, +1)
            val = cj * coeff_B(omega, tab, j, p) / den_up
            if val != 0:
                key = (tableau_index(up), col)
                cells[key] = cells.get(key, 0) + val
            down = shift_tableau(omega, tab, j, 2 * p - 1, -1)
            val = -coeff_B(omega, down, j, p) / (cj * den_down)
            if val != 0:
                key = (tableau_index(down), col)
                cells[key] = cells.get(key, 0) + val
        diag = 1j * coeff_C(omega, tab, p)
        if diag != 0:
            key = (col, col)
            cells[key] = cells.get(key, 0) + diag
    return _assemble(f"I{2 * p}{2 * p - 1}", dim, cells)


def build_representation(omega):
    """Operators for the neighbor generators in order (I21, I32, ..., I_{n,n-1})."""
    ops = []
    for j in range(1, omega.n):
        if j % 2 == 1:
            ops.append(operator_even(omega, (j + 1) // 2))
        else:
            ops.append(operator_odd(omega, j // 2))
    return ops


# -- verification --------------------------------------------------------------


def relation_residual(ops, root):
    """Max-entry residual of every defining relation on the given operators."""
    n = len(ops) + 1
    dims = {op.dim for op in ops}
    if len(dims) != 1:
        raise DimensionMismatch(f"operators have mixed dimensions {sorted(dims)}")
    dense = [op.to_dense() for op in ops]
    q = root.value()
    qq = q + 1 / q
    report = []
    for name, kind, idx in defining_relation_instances(n):
        if kind == "commute":
            i, j = idx
            a, b = dense[i - 2], dense[j - 2]
            resid = a @ b - b @ a
        else:
            (i,) = idx
            a, b = dense[i - 2], dense[i - 1]
            if kind == "serre-b":
                a, b = b, a
            resid = a @ a @ b - qq * (a @ b @ a) + b @ a @ a + b
        report.append({"relation": name, "residual": float(np.abs(resid).max())})
    return report


def commutant_dimension(ops):
    """Dimension of {X : XT = TX for all T}; 1 certifies irreducibility.

    Solves the stacked Sylvester system on d^2 unknowns; singular values
    below 1e-8 * sigma_max count as zero. Small systems go through a dense
    SVD, larger ones through sparse eigensolves of the normal matrix.
    """
    if not ops:
        raise DimensionMismatch("need at least one operator")
    dims = {op.dim for op in ops}
    if len(dims) != 1:
        raise DimensionMismatch(f"operators have mixed dimensions {sorted(dims)}")
    d = dims.pop()
    d2 = d * d
    if d2 <= 1600:
        eye = np.eye(d)
        blocks = [
            np.kron(eye, op.to_dense()) - np.kron(op.to_dense().T, eye) for op in ops
        ]
        m = np.vstack(blocks)
        if not m.any():
            return d2
        sigma = np.linalg.svd(m, compute_uv=False)
        smax = sigma[0]
        return int((sigma < 1e-8 * smax).sum())

    from scipy.sparse import identity, kron, vstack
    from scipy.sparse.linalg import eigsh, svds

    eye = identity(d, dtype=np.complex128, format="csr")
    blocks = []
    for op in ops:
        t = op.to_csr()
        blocks.append(kron(eye, t) - kron(t.T, eye))
    m = vstack(blocks).tocsr()
    if m.nnz == 0:
        return d2
    smax = float(svds(m, k=1, return_singular_vectors=False)[0])
    gram = (m.getH() @ m).tocsc()
    thresh = (1e-8 * smax) ** 2
    k = 8
    while True:
        vals = eigsh(
            gram,
            k=k,
            sigma=-(smax ** 2) * 1e-6,
            which="LM",
            return_eigenvectors=False,
        )
        count = int((vals <= thresh).sum())
        if count < k or k >= min(128, d2 - 1):
            return count
        k = min(k * 2, 128)


# -- parameter sampling ---------------------------------------------------------


def _dist_to_integers(z):
    return abs(complex(z) - round(z.real))


def _dist_to_half_integers(z):
    shifted = complex(z) - 0.5
    return abs(shifted - round(shifted.real))


def assert_generic(omega, margin=1e-3):
    """Check the h genericity preconditions with a safety margin.

    Pairwise sums and differences within each h row must stay `margin` away
    from the integers; the h_{p,2p+1} entries must stay `margin` away from
    half-integers; c values must stay away from zero. Raises
    DegenerateParameter naming the first violated condition.
    """
    n = omega.n
    for s in range(2, n):
        row = [(i, omega.h[(i, s)]) for i in range(1, s // 2 + 1)]
        for a in range(len(row)):
            for b in range(a + 1, len(row)):
                (ia, ha), (ib, hb) = row[a], row[b]
                if _dist_to_integers(ha - hb) <= margin:
                    raise DegenerateParameter(
                        f"h({ia},{s}) - h({ib},{s}) is within {margin} of an integer"
                    )
                if _dist_to_integers(ha + hb) <= margin:
                    raise DegenerateParameter(
                        f"h({ia},{s}) + h({ib},{s}) is within {margin} of an integer"
                    )
    for (i, s), value in omega.h.items():
        if s == 2 * i + 1 and _dist_to_half_integers(value) <= margin:
            raise DegenerateParameter(
                f"h({i},{s}) is within {margin} of a half-integer"
            )
    for key, value in omega.c.items():
        if abs(value) <= margin:
            raise DegenerateParameter(f"c{key} is within {margin} of zero")
    return True


def _sample_real_part(rng, margin=1e-3):
    while True:
        x = rng.random()
        if min(abs(x), abs(x - 0.5), abs(x - 1.0)) > margin:
            return x


def _sample_imag_part(rng, used, margin=1e-3):
    for _ in range(1000):
        y = rng.uniform(0.05, 0.25)
        if all(abs(y - u) > margin for u in used):
            used.append(y)
            return y
    raise ParameterSamplingError("could not separate imaginary parts")


def random_generic_params(n, order_k, seed, t=1):
    """Deterministic generic parameter draw for the given root of unity.

    Real parts are uniform on (0,1) away from {0, 1/2, 1}; every parameter
    gets a distinct positive imaginary part, which keeps all bracket
    denominators away from zero for every admissible t. c values live on the
    annulus 0.5 <= |c| <= 2.
    """
    root = RootOfUnity(order_k, t)
    rng = random.Random(seed)
    for _ in range(200):
        used_imag = []
        m_top = tuple(
            complex(_sample_real_part(rng), _sample_imag_part(rng, used_imag))
            for _ in range(n // 2)
        )
        h = {}
        c = {}
        for slot in variable_slots(n):
            h[slot] = complex(
                _sample_real_part(rng), _sample_imag_part(rng, used_imag)
            )
            mag = rng.uniform(0.5, 2.0)
            phase = rng.uniform(0.0, 2.0 * cmath.pi)
            c[slot] = mag * cmath.exp(1j * phase)
        omega = ParamsOmega(n=n, root=root, m_top=m_top, h=h, c=c)
        try:
            assert_generic(omega)
        except DegenerateParameter:
            continue
        return omega
    raise ParameterSamplingError(
        f"no generic parameters found for n={n}, k={order_k}, seed={seed}"
    )
