"""Embedding and composition checks on explicit representation matrices.

The tilde elements F_{j-1} - q q^{-H_{j-1}} E_{j-1} are verified to satisfy
every defining relation of the deformed orthogonal algebra inside the vector
representation of the standard quantum algebra, with exact Laurent
coefficients. The rank-3 composition map (X from the Cartan part, Y from
E - F) is verified numerically on the standard weight-basis irreps.
"""

from __future__ import annotations

import cmath
from dataclasses import dataclass
from fractions import Fraction

import numpy as np

from .coeffring import LaurentPoly, qnumber
from .errors import DegenerateQ, IndexOutOfRange, SingularDenominator
from .pbw.verify import defining_relation_instances

# -- small exact matrix layer (lists of lists over LaurentPoly or complex) ----


def mat_mul(a, b):
    rows, inner, cols = len(a), len(b), len(b[0])
    out = []
    for i in range(rows):
        row = []
        for j in range(cols):
            acc = None
            for t in range(inner):
                term = a[i][t] * b[t][j]
                acc = term if acc is None else acc + term
            row.append(acc)
        out.append(row)
    return out


def mat_add(a, b):
    return [[x + y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_sub(a, b):
    return [[x - y for x, y in zip(ra, rb)] for ra, rb in zip(a, b)]


def mat_scale(s, a):
    return [[s * x for x in row] for row in a]


def mat_is_zero(a):
    return all(not x for row in a for x in row)


def mat_eval(a, q):
    """Numeric numpy array from a symbolic matrix."""
    out = np.zeros((len(a), len(a[0])), dtype=np.complex128)
    for i, row in enumerate(a):
        for j, x in enumerate(row):
            out[i, j] = x.evaluate(q)
    return out


def poly_at_one(poly):
    """Exact rational value of a Laurent polynomial at q = 1."""
    return sum((Fraction(c) for _, c in poly.items2()), Fraction(0))


def _sym_zeros(n):
    return [[LaurentPoly.zero() for _ in range(n)] for _ in range(n)]


def _sym_elementary(n, r, c, value=None):
    m = _sym_zeros(n)
    m[r][c] = LaurentPoly.one() if value is None else value
    return m


# -- vector representation of the standard quantum algebra --------------------


@dataclass
class SlnRepMatrices:
    """Vector-representation matrices; symbolic entries are LaurentPoly."""

    n: int
    symbolic: bool
    q: object
    E: list
    F: list
    K: list
    Kinv: list


def _self_check_sln(rep):
    """Constructor check of the quantum-algebra relations, denominator-free."""
    n = rep.n
    if rep.symbolic:
        qq = qnumber(2)
        qdiff = LaurentPoly.q(1) - LaurentPoly.q(-1)
        qpow = lambda e: LaurentPoly.q(e)
        is_zero = mat_is_zero
    else:
        q = rep.q
        qq = q + 1 / q
        qdiff = q - 1 / q
        qpow = lambda e: q ** e
        scale = max(abs(q), abs(1 / q), 1.0) ** 3

        def is_zero(m):
            return max(abs(x) for row in m for x in row) < 1e-12 * scale

    def check(flag, what):
        if not flag:
            raise AssertionError(f"vector representation self-check failed: {what}")

    cartan = {0: 2, 1: -1}
    for i in range(n - 1):
        for j in range(n - 1):
            a = cartan.get(abs(i - j), 0)
            lhs = mat_mul(mat_mul(rep.K[i], rep.E[j]), rep.Kinv[i])
            check(is_zero(mat_sub(lhs, mat_scale(qpow(a), rep.E[j]))), f"KEK i={i} j={j}")
            lhs = mat_mul(mat_mul(rep.K[i], rep.F[j]), rep.Kinv[i])
            check(is_zero(mat_sub(lhs, mat_scale(qpow(-a), rep.F[j]))), f"KFK i={i} j={j}")
            comm = mat_sub(mat_mul(rep.E[i], rep.F[j]), mat_mul(rep.F[j], rep.E[i]))
            rhs = mat_sub(rep.K[i], rep.Kinv[i]) if i == j else None
            lhs = mat_scale(qdiff, comm)
            check(
                is_zero(mat_sub(lhs, rhs) if rhs is not None else lhs),
                f"EF i={i} j={j}",
            )
            if abs(i - j) == 1:
                for fam in (rep.E, rep.F):
                    a2b = mat_mul(mat_mul(fam[i], fam[i]), fam[j])
                    aba = mat_mul(mat_mul(fam[i], fam[j]), fam[i])
                    ba2 = mat_mul(fam[j], mat_mul(fam[i], fam[i]))
                    serre = mat_add(mat_sub(a2b, mat_scale(qq, aba)), ba2)
                    check(is_zero(serre), f"serre i={i} j={j}")
            elif i != j:
                for tag, fam in (("EE", rep.E), ("FF", rep.F)):
                    comm = mat_sub(
                        mat_mul(fam[i], fam[j]), mat_mul(fam[j], fam[i])
                    )
                    check(is_zero(comm), f"{tag} i={i} j={j}")


def vector_rep_sln(n, symbolic=True, q=None):
    """Standard vector representation; E_i, F_i elementary, K_i diagonal."""
    if n < 2:
        raise IndexOutOfRange(f"need n >= 2, got {n}")
    if symbolic:
        one = LaurentPoly.one()
        qp = LaurentPoly.q(1)
        qm = LaurentPoly.q(-1)
        E = [_sym_elementary(n, i, i + 1) for i in range(n - 1)]
        F = [_sym_elementary(n, i + 1, i) for i in range(n - 1)]
        K, Kinv = [], []
        for i in range(n - 1):
            k = [[one if r == c else LaurentPoly.zero() for c in range(n)] for r in range(n)]
            kinv = [row[:] for row in k]
            k[i][i], k[i + 1][i + 1] = qp, qm
            kinv[i][i], kinv[i + 1][i + 1] = qm, qp
            K.append(k)
            Kinv.append(kinv)
        rep = SlnRepMatrices(n=n, symbolic=True, q=None, E=E, F=F, K=K, Kinv=Kinv)
    else:
        if q is None or q == 0:
            raise DegenerateQ("numeric mode needs a nonzero q")
        E = [np.zeros((n, n), dtype=np.complex128) for _ in range(n - 1)]
        F = [np.zeros((n, n), dtype=np.complex128) for _ in range(n - 1)]
        K, Kinv = [], []
        for i in range(n - 1):
            E[i][i, i + 1] = 1
            F[i][i + 1, i] = 1
            k = np.eye(n, dtype=np.complex128)
            kinv = np.eye(n, dtype=np.complex128)
            k[i, i], k[i + 1, i + 1] = q, 1 / q
            kinv[i, i], kinv[i + 1, i + 1] = 1 / q, q
            K.append(k)
            Kinv.append(kinv)
        E = [m.tolist() for m in E]
        F = [m.tolist() for m in F]
        K = [m.tolist() for m in K]
        Kinv = [m.tolist() for m in Kinv]
        rep = SlnRepMatrices(n=n, symbolic=False, q=q, E=E, F=F, K=K, Kinv=Kinv)
    _self_check_sln(rep)
    return rep


def tilde_I(j, rep):
    """The element F_{j-1} - q * q^{-H_{j-1}} * E_{j-1} in the representation."""
    if not (2 <= j <= rep.n):
        raise IndexOutOfRange(f"tilde index {j} outside 2..{rep.n}")
    qs = LaurentPoly.q(1) if rep.symbolic else rep.q
    corr = mat_scale(qs, mat_mul(rep.Kinv[j - 2], rep.E[j - 2]))
    return mat_sub(rep.F[j - 2], corr)


def _relation_matrices(n, tildes, qq):
    """(name, residual matrix) for each defining relation on the tilde images."""
    out = []
    for name, kind, idx in defining_relation_instances(n):
        if kind == "commute":
            i, j = idx
            a, b = tildes[i - 2], tildes[j - 2]
            resid = mat_sub(mat_mul(a, b), mat_mul(b, a))
        else:
            (i,) = idx
            a, b = tildes[i - 2], tildes[i - 1]
            if kind == "serre-b":
                a, b = b, a
            a2b = mat_mul(mat_mul(a, a), b)
            aba = mat_mul(mat_mul(a, b), a)
            ba2 = mat_mul(b, mat_mul(a, a))
            resid = mat_add(mat_add(mat_sub(a2b, mat_scale(qq, aba)), ba2), b)
        out.append((name, resid))
    return out


def verify_embedding(n):
    """Exact symbolic check of every defining relation on the tilde images,
    plus the q=1 specialization against the classical antisymmetric
    generators. Returns report entries with mode 'symbolic'."""
    rep = vector_rep_sln(n, symbolic=True)
    tildes = [tilde_I(j, rep) for j in range(2, n + 1)]
    report = []
    for name, resid in _relation_matrices(n, tildes, qnumber(2)):
        report.append({
            "check": f"embed[{n}] {name}",
            "mode": "symbolic",
            "pass": mat_is_zero(resid),
            "residual": None,
        })
    one = Fraction(1)
    for j in range(2, n + 1):
        ok = True
        for r in range(n):
            for c in range(n):
                want = Fraction(0)
                if (r, c) == (j - 1, j - 2):
                    want = one
                elif (r, c) == (j - 2, j - 1):
                    want = -one
                if poly_at_one(tildes[j - 2][r][c]) != want:
                    ok = False
        report.append({
            "check": f"embed[{n}] classical-limit I{j}{j - 1}",
            "mode": "symbolic",
            "pass": ok,
            "residual": None,
        })
    return report


def embedding_residuals_numeric(n, q, tol=1e-12):
    """Numeric rerun of the embedding check at a concrete q; used to confirm
    the symbolic result specializes coherently."""
    rep = vector_rep_sln(n, symbolic=False, q=q)
    tildes = [tilde_I(j, rep) for j in range(2, n + 1)]
    report = []
    for name, resid in _relation_matrices(n, tildes, q + 1 / q):
        worst = max(abs(x) for row in resid for x in row)
        report.append({
            "check": f"embed[{n}] {name} @q={q!r}",
            "mode": "numeric",
            "pass": bool(worst < tol),
            "residual": float(worst),
        })
    return report


# -- weight-basis irreps and the rank-3 composition ---------------------------


@dataclass
class Sl2IrrepMatrices:
    twoJ: int
    q: complex
    E: np.ndarray
    F: np.ndarray
    qH: np.ndarray
    qHinv: np.ndarray


def sl2_irrep(twoJ, q):
    """Standard (twoJ+1)-dimensional weight-basis irrep.

    qH carries the half-integer weight spectrum q^((twoJ-2r)/2) so that
    [E, F] = (qH^2 - qH^-2)/(q - q^-1) holds, matching the target of the
    composition map. Raises DegenerateQ when q is a root of unity of order
    at most twoJ+1 (the irrep degenerates there).
    """
    if not isinstance(twoJ, int) or twoJ < 0:
        raise ValueError(f"twoJ must be a nonnegative integer, got {twoJ!r}")
    q = complex(q)
    if q == 0:
        raise DegenerateQ("q must be nonzero")
    for m in range(1, twoJ + 2):
        if abs(q ** m - 1) < 1e-9:
            raise DegenerateQ(f"q is a root of unity of order {m} <= twoJ+1")
    dim = twoJ + 1
    sqrt_q = cmath.sqrt(q)

    def bracket(a):
        return (q ** a - q ** (-a)) / (q - 1 / q)

    E = np.zeros((dim, dim), dtype=np.complex128)
    F = np.zeros((dim, dim), dtype=np.complex128)
    for r in range(1, dim):
        entry = cmath.sqrt(bracket(r) * bracket(twoJ + 1 - r))
        E[r - 1, r] = entry
        F[r, r - 1] = entry
    qH = np.diag(np.array([sqrt_q ** (twoJ - 2 * r) for r in range(dim)]))
    qHinv = np.diag(np.array([sqrt_q ** (2 * r - twoJ) for r in range(dim)]))

    # weight-basis self-check, denominators cleared
    lhs = (q - 1 / q) * (E @ F - F @ E)
    rhs = qH @ qH - qHinv @ qHinv
    scale = max(np.abs(E).max(), 1.0) ** 2
    if np.abs(lhs - rhs).max() > 1e-10 * scale:
        raise AssertionError("weight-basis self-check failed: EF commutator")
    step = qH @ E @ qHinv - q * E
    if np.abs(step).max() > 1e-10 * scale:
        raise AssertionError("weight-basis self-check failed: qH grading")
    return Sl2IrrepMatrices(twoJ=twoJ, q=q, E=E, F=F, qH=qH, qHinv=qHinv)


def psi_images(irrep):
    """X from the Cartan part, Y from (E - F) divided by qH + qH^-1."""
    q = irrep.q
    denom = q - 1 / q
    if abs(denom) < 1e-12:
        raise SingularDenominator("q - q^(-1) vanishes")
    X = (1j / denom) * (irrep.qH - irrep.qHinv)
    diag = np.diagonal(irrep.qH + irrep.qHinv)
    if np.abs(diag).min() < 1e-12:
        raise SingularDenominator("q^H + q^-H is not invertible")
    Y = (irrep.E - irrep.F) / diag[np.newaxis, :]
    return X, Y


def verify_psi(twoJ, q, tol=1e-10):
    """Residuals of both rank-3 defining relations on the psi images."""
    irrep = sl2_irrep(twoJ, q)
    X, Y = psi_images(irrep)
    q = irrep.q
    qq = q + 1 / q
    r1 = X @ X @ Y - qq * (X @ Y @ X) + Y @ X @ X + Y
    r2 = Y @ Y @ X - qq * (Y @ X @ Y) + X @ Y @ Y + X
    report = []
    for name, resid in (("serre-a", r1), ("serre-b", r2)):
        worst = float(np.abs(resid).max()) if resid.size else 0.0
        report.append({
            "check": f"psi twoJ={twoJ} {name}",
            "mode": "numeric",
            "pass": bool(worst < tol),
            "residual": worst,
        })
    return report


def report_all_pass(report):
    return all(entry["pass"] for entry in report)


def sample_generic_q(rng, on_circle, min_order=12):
    """One random q avoiding roots of unity of order <= min_order.

    on_circle picks |q| = 1 (phase bounded away from 1); otherwise the
    modulus lands in [0.4, 0.85] or [1.15, 2.5], where no power returns
    to 1 at all. rng is a random.Random instance.
    """
    bound = max(int(min_order), 12)
    for _ in range(1000):
        if on_circle:
            theta = rng.uniform(0.05, 2 * cmath.pi - 0.05)
            q = cmath.exp(1j * theta)
        else:
            mod = rng.uniform(1.15, 2.5)
            if rng.random() < 0.5:
                mod = 1 / mod
            q = mod * cmath.exp(1j * rng.uniform(0.0, 2 * cmath.pi))
        if all(abs(q ** m - 1) > 1e-6 for m in range(1, bound + 1)):
            return q
    raise DegenerateQ("could not sample a q clear of low-order roots of unity")
