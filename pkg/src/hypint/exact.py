"""Exact rational coefficient tables and elementary exact sequences.

Everything in this module is computed with ``fractions.Fraction`` — no
floating point anywhere.  Tables are built lazily up to the largest row
ever requested and cached per kind; dual-construction cross-checks
(explicit sum vs. recurrence, closed-form inverse vs. exact triangular
inversion) raise :class:`ConsistencyError` on any mismatch.
"""

from __future__ import annotations

import csv
import io
import json
import threading
from dataclasses import dataclass, field
from fractions import Fraction
from functools import lru_cache
from math import comb, factorial

from .errors import ConsistencyError, DomainError, UnsupportedDegree

TABLE_KINDS = ("g", "h", "c", "d", "u", "v", "x", "y")

_lock = threading.Lock()


@dataclass
class CoeffTable:
    """Lower-triangular exact-rational table keyed ``(row, col)``.

    ``kind`` records which recurrence built the table.  A missing entry
    means an exact zero.  Row/column semantics follow the table's defining
    recurrence: for the g/h tables the row is the upper index N and the
    column the order index k.
    """

    kind: str
    max_row: int
    entries: dict = field(default_factory=dict)

    def __getitem__(self, key) -> Fraction:
        return self.entries.get(key, Fraction(0))

    def rows(self):
        return sorted(self.entries)

    def to_csv(self) -> str:
        buf = io.StringIO()
        w = csv.writer(buf, lineterminator="\n")
        w.writerow(["N", "k", "numerator", "denominator"])
        for (n, k) in sorted(self.entries):
            v = self.entries[(n, k)]
            w.writerow([n, k, v.numerator, v.denominator])
        return buf.getvalue()

    def to_json(self) -> str:
        rows = [
            {"n": n, "k": k, "num": str(v.numerator), "den": str(v.denominator)}
            for (n, k), v in sorted(self.entries.items())
        ]
        return json.dumps(rows)

    @classmethod
    def from_csv(cls, kind: str, text: str) -> "CoeffTable":
        rdr = csv.reader(io.StringIO(text))
        header = next(rdr)
        if header != ["N", "k", "numerator", "denominator"]:
            raise ValueError(f"unexpected CSV header: {header}")
        entries = {}
        for n, k, num, den in rdr:
            entries[(int(n), int(k))] = Fraction(int(num), int(den))
        max_row = max((n for n, _ in entries), default=0)
        return cls(kind=kind, max_row=max_row, entries=entries)


# ---------------------------------------------------------------------------
# Elementary exact sequences


@lru_cache(maxsize=None)
def bernoulli(n: int) -> Fraction:
    """Bernoulli number B_n with the B_1 = -1/2 convention (B_n(0) = B_n)."""
    if n < 0:
        raise DomainError("Bernoulli index must be >= 0")
    if n == 0:
        return Fraction(1)
    if n == 1:
        return Fraction(-1, 2)
    if n % 2 == 1:
        return Fraction(0)
    # sum_{k=0}^{n-1} C(n+1, k) B_k = 0
    s = Fraction(0)
    for k in range(n):
        s += comb(n + 1, k) * bernoulli(k)
    return -s / (n + 1)


def bernoulli_poly(n: int, z: Fraction) -> Fraction:
    """Bernoulli polynomial B_n(z) at an exact rational point."""
    if n < 0:
        raise DomainError("Bernoulli polynomial degree must be >= 0")
    z = Fraction(z)
    return sum(comb(n, k) * bernoulli(k) * z ** (n - k) for k in range(n + 1))


def bernoulli_poly_coeffs(n: int) -> list:
    """Coefficients of B_n(z), highest degree first (for Horner evaluation)."""
    return [comb(n, k) * bernoulli(k) for k in range(n + 1)]


@lru_cache(maxsize=None)
def euler_number(n: int) -> Fraction:
    """Euler number E_n (E_odd = 0, E_0 = 1, E_2 = -1, ...)."""
    if n < 0:
        raise DomainError("Euler index must be >= 0")
    if n % 2 == 1:
        return Fraction(0)
    if n == 0:
        return Fraction(1)
    s = Fraction(0)
    for k in range(0, n, 2):
        s += comb(n, k) * euler_number(k)
    return -s


@lru_cache(maxsize=None)
def harmonic(n: int) -> Fraction:
    if n < 0:
        raise DomainError("harmonic index must be >= 0")
    if n == 0:
        return Fraction(0)
    return harmonic(n - 1) + Fraction(1, n)


def alt_power_sum(m: int, k: int) -> Fraction:
    """sum_{j=1}^{k} (-1)^j j^m by the Faulhaber-derived closed forms, m <= 4."""
    if k < 0:
        raise DomainError("upper limit must be >= 0")
    if m < 0 or m > 4:
        raise UnsupportedDegree(f"alternating power sum implemented for 0 <= m <= 4, got {m}")
    sk = (-1) ** k
    half = Fraction(1 + sk, 2)  # (1 + (-1)^k)/2
    if m == 0:
        return Fraction(sk - 1, 2)
    if m == 1:
        return sk * Fraction(1, 2) * (k + 1 - half)
    if m == 2:
        return sk * Fraction(k * (k + 1), 2)
    if m == 3:
        return sk * (Fraction(k**3, 2) + Fraction(3 * k**2, 4)) + Fraction(1, 4) * (1 - half)
    return sk * (Fraction(k**4, 2) + k**3 - Fraction(k, 2))


def alt_power_sum_brute(m: int, k: int) -> Fraction:
    """Independent brute-force evaluation; oracle for alt_power_sum."""
    return Fraction(sum((-1) ** j * j**m for j in range(1, k + 1)))


# ---------------------------------------------------------------------------
# Recurrence tables

_cache: dict = {}


def _cached(kind: str, n_max: int, builder):
    with _lock:
        have = _cache.get(kind)
        if have is None or have.max_row < n_max:
            _cache[kind] = builder(n_max)
        return _cache[kind]


def g_table(n_max: int) -> CoeffTable:
    """g_{k,N} for 1 <= k <= N <= n_max+1, stored at (N, k).

    g_{1,N} = 1;  g_{k,N} = sum_{j=k-1}^{N-1} g_{k-1,j} / (2j-1)^2.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    return _cached("g", n_max + 1, _build_g)


def _build_g(rows: int) -> CoeffTable:
    e = {}
    for n in range(1, rows + 1):
        e[(n, 1)] = Fraction(1)
        for k in range(2, n + 1):
            e[(n, k)] = sum(
                (e[(j, k - 1)] / (2 * j - 1) ** 2 for j in range(k - 1, n)), Fraction(0)
            )
    return CoeffTable("g", rows, e)


def h_table(n_max: int) -> CoeffTable:
    """h_{k,N} for 1 <= k <= N <= n_max, stored at (N, k).

    h_{1,N} = 1;  h_{k,N} = sum_{j=k-1}^{N-1} h_{k-1,j} / j^2.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    return _cached("h", n_max, _build_h)


def _build_h(rows: int) -> CoeffTable:
    e = {}
    for n in range(1, rows + 1):
        e[(n, 1)] = Fraction(1)
        for k in range(2, n + 1):
            e[(n, k)] = sum((e[(j, k - 1)] / j**2 for j in range(k - 1, n)), Fraction(0))
    return CoeffTable("h", rows, e)


def _c_explicit(n: int, k: int) -> Fraction:
    # 4^-k sum_{j=0}^{k} C(2k+1, k-j) (-1)^(j+1) (2j+1)^(2n+1)
    s = sum(comb(2 * k + 1, k - j) * (-1) ** (j + 1) * (2 * j + 1) ** (2 * n + 1) for j in range(k + 1))
    return Fraction(s, 4**k)


def sech_deriv_coeffs(n_max: int) -> CoeffTable:
    """Coefficients c_{N,k} of the odd sech derivatives, 0 <= k <= N <= n_max.

    Built both from the explicit binomial sum and from the recurrence
    c_{N,0} = -1, c_{N+1,k} = (2k+1)^2 c_{N,k} - 2k(2k+1) c_{N,k-1};
    the two constructions must agree exactly.
    """
    if n_max < 0:
        raise DomainError("n_max must be >= 0")
    return _cached("c", n_max, _build_c)


def _build_c(rows: int) -> CoeffTable:
    e = {(0, 0): Fraction(-1)}
    for n in range(1, rows + 1):
        e[(n, 0)] = Fraction(-1)
        for k in range(1, n + 1):
            e[(n, k)] = (2 * k + 1) ** 2 * e.get((n - 1, k), Fraction(0)) - 2 * k * (
                2 * k + 1
            ) * e.get((n - 1, k - 1), Fraction(0))
    for n in range(rows + 1):
        for k in range(n + 1):
            ref = _c_explicit(n, k)
            if e[(n, k)] != ref:
                raise ConsistencyError(
                    f"sech derivative coefficient c_{{{n},{k}}}: recurrence {e[(n, k)]} "
                    f"!= explicit sum {ref}"
                )
    return CoeffTable("c", rows, e)


def _d_explicit(n: int, k: int) -> Fraction:
    # 2 * 4^-k sum_{j=1}^{k} C(2k, k-j) (-1)^j (2j)^(2n)
    s = sum(comb(2 * k, k - j) * (-1) ** j * (2 * j) ** (2 * n) for j in range(1, k + 1))
    return Fraction(2 * s, 4**k)


def tanh_deriv_coeffs(n_max: int) -> CoeffTable:
    """Coefficients d_{N,k} of the even tanh derivatives, 1 <= k <= N <= n_max.

    Dual construction as for :func:`sech_deriv_coeffs`:
    d_{N,1} = -2^(2N-1), d_{N+1,k} = 4k^2 d_{N,k} - (2k-1)(2k) d_{N,k-1}.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    return _cached("d", n_max, _build_d)


def _build_d(rows: int) -> CoeffTable:
    e = {(1, 1): Fraction(-2)}
    for n in range(2, rows + 1):
        e[(n, 1)] = Fraction(-(2 ** (2 * n - 1)))
        for k in range(2, n + 1):
            e[(n, k)] = 4 * k**2 * e.get((n - 1, k), Fraction(0)) - (2 * k - 1) * (
                2 * k
            ) * e.get((n - 1, k - 1), Fraction(0))
    for n in range(1, rows + 1):
        for k in range(1, n + 1):
            ref = _d_explicit(n, k)
            if e[(n, k)] != ref:
                raise ConsistencyError(
                    f"tanh derivative coefficient d_{{{n},{k}}}: recurrence {e[(n, k)]} "
                    f"!= explicit sum {ref}"
                )
    return CoeffTable("d", rows, e)


def _invert_lower_triangular(t: CoeffTable, lo: int, hi: int, kind: str) -> CoeffTable:
    """Exact inverse of a unit-diagonal lower-triangular table on rows lo..hi."""
    inv = {}
    for n in range(lo, hi + 1):
        inv[(n, n)] = Fraction(1) / t[(n, n)]
        for k in range(lo, n):
            s = sum((t[(n, j)] * inv[(j, k)] for j in range(k, n)), Fraction(0))
            inv[(n, k)] = -s / t[(n, n)]
    return CoeffTable(kind, hi, inv)


def normalized_matrices(n_max: int):
    """The four normalized matrices (u, v, x, y) up to row n_max.

    u_{N,k} = (-1)^(N+1) c_{N,k}/(2N+1)!   (rows 0..n_max, unit diagonal)
    v       = closed-form inverse of u via the g table
    x_{N,k} = (-1)^N d_{N,k}/(2N)!         (rows 1..n_max, unit diagonal)
    y       = closed-form inverse of x via the h table

    v and y are recomputed by exact triangular inversion; any mismatch with
    the closed forms raises ConsistencyError.
    """
    if n_max < 1:
        raise DomainError("n_max must be >= 1")
    c = sech_deriv_coeffs(n_max)
    d = tanh_deriv_coeffs(n_max)
    g = g_table(n_max)
    h = h_table(n_max)

    u = CoeffTable(
        "u",
        n_max,
        {
            (n, k): Fraction((-1) ** (n + 1)) * c[(n, k)] / factorial(2 * n + 1)
            for n in range(n_max + 1)
            for k in range(n + 1)
        },
    )
    x = CoeffTable(
        "x",
        n_max,
        {
            (n, k): Fraction((-1) ** n) * d[(n, k)] / factorial(2 * n)
            for n in range(1, n_max + 1)
            for k in range(1, n + 1)
        },
    )
    v = CoeffTable(
        "v",
        n_max,
        {
            (n, k): factorial(2 * k + 1)
            * Fraction(comb(2 * n, n), (2 * n + 1) * 2 ** (2 * n))
            * g[(n + 1, k + 1)]
            for n in range(n_max + 1)
            for k in range(n + 1)
        },
    )
    y = CoeffTable(
        "y",
        n_max,
        {
            (n, k): factorial(2 * k)
            * Fraction(2 ** (2 * n - 2 * k), n**2 * comb(2 * n, n))
            * h[(n, k)]
            for n in range(1, n_max + 1)
            for k in range(1, n + 1)
        },
    )

    v_inv = _invert_lower_triangular(u, 0, n_max, "v")
    y_inv = _invert_lower_triangular(x, 1, n_max, "y")
    if v.entries != v_inv.entries:
        raise ConsistencyError("closed-form v differs from exact inverse of u")
    if y.entries != y_inv.entries:
        raise ConsistencyError("closed-form y differs from exact inverse of x")
    return u, v, x, y


def matrix_product(a: CoeffTable, b: CoeffTable, lo: int, hi: int) -> dict:
    """Exact product entries (a @ b)[n, s] for lo <= s <= n <= hi."""
    out = {}
    for n in range(lo, hi + 1):
        for s in range(lo, n + 1):
            out[(n, s)] = sum((a[(n, k)] * b[(k, s)] for k in range(s, n + 1)), Fraction(0))
    return out


@lru_cache(maxsize=None)
def dN_table(n: int):
    """The integer family d_N(p, 2k) for 0 <= p <= N-1, 0 <= k <= p.

    d_N(0,0) = 1, d_N(p,0) = 0 for p >= 1,
    d_N(p,2k) = -2k d_N(p-1,2k) + (N-p-1+2k) d_N(p-1,2k-2).

    Returned as a map (p, 2k) -> Fraction (the values are integers).
    Distinct from the tanh-derivative d_{N,k} table.
    """
    if n < 2:
        raise DomainError("N must be >= 2")
    e = {(0, 0): Fraction(1)}
    for p in range(1, n):
        e[(p, 0)] = Fraction(0)
        for k in range(1, p + 1):
            e[(p, 2 * k)] = -2 * k * e.get((p - 1, 2 * k), Fraction(0)) + (
                n - p - 1 + 2 * k
            ) * e.get((p - 1, 2 * k - 2), Fraction(0))
    return e


def table_by_kind(kind: str, n: int) -> CoeffTable:
    """Dispatch used by the table export interface (kinds g,h,c,d,u,v,x,y,dN)."""
    kind = kind.lower()
    if kind == "g":
        return g_table(n)
    if kind == "h":
        return h_table(n)
    if kind == "c":
        return sech_deriv_coeffs(n)
    if kind == "d":
        return tanh_deriv_coeffs(n)
    if kind in ("u", "v", "x", "y"):
        u, v, x, y = normalized_matrices(n)
        return {"u": u, "v": v, "x": x, "y": y}[kind]
    if kind == "dn":
        ent = dN_table(n)
        return CoeffTable("dN", n - 1, dict(ent))
    raise DomainError(f"unknown table kind {kind!r}")
