"""Exact integer linear algebra over arbitrary-precision ints.

The core routine is a two-phase Smith reduction:

1. sparse elimination on unit pivots (Markowitz-style choice, fewest entries
   in the pivot column), which disposes of almost all of a boundary matrix
   whose entries are 0/+-1;
2. a dense Smith reduction of whatever remains, pivoting on the entry of
   smallest absolute value (ties broken by position).

Row and column operations can be recorded, together with their inverses, so
``U @ M @ V == D`` comes with integral ``U_inv`` and ``V_inv`` that certify
unimodularity.  When only ranks or invariant factors are wanted the same
reduction runs without bookkeeping.
"""

from __future__ import annotations

import heapq
from collections import defaultdict
from dataclasses import dataclass, field
from math import gcd
from typing import Iterable, Mapping, Sequence


class ChainComplexError(ValueError):
    """A pair of maps that does not compose to zero, or a non-chain map."""


# ---------------------------------------------------------------------------
# sparse matrices


def _axpy(dst: dict, src: Mapping, f: int) -> None:
    """dst += f * src for sparse dict vectors."""
    for k, v in src.items():
        nv = dst.get(k, 0) + f * v
        if nv:
            dst[k] = nv
        else:
            dst.pop(k, None)


class IntMatrix:
    """Sparse integer matrix stored as a dict of nonzero rows."""

    __slots__ = ("nrows", "ncols", "_rows")

    def __init__(self, nrows: int, ncols: int, entries=None):
        self.nrows = int(nrows)
        self.ncols = int(ncols)
        self._rows: dict[int, dict[int, int]] = {}
        if entries is None:
            return
        items = entries.items() if isinstance(entries, Mapping) else entries
        for item in items:
            if isinstance(entries, Mapping):
                (r, c), v = item
            else:
                r, c, v = item
            if not (0 <= r < self.nrows and 0 <= c < self.ncols):
                raise IndexError(f"entry ({r}, {c}) outside {self.nrows}x{self.ncols}")
            if v:
                row = self._rows.setdefault(r, {})
                nv = row.get(c, 0) + v
                if nv:
                    row[c] = nv
                else:
                    del row[c]
                    if not row:
                        del self._rows[r]

    @classmethod
    def _from_rows(cls, nrows: int, ncols: int, rows: Mapping[int, Mapping[int, int]]):
        m = cls(nrows, ncols)
        m._rows = {r: dict(d) for r, d in rows.items() if d}
        return m

    @classmethod
    def _from_columns(cls, nrows: int, cols: Sequence[Mapping[int, int]]):
        rows: dict[int, dict[int, int]] = {}
        for c, col in enumerate(cols):
            for r, v in col.items():
                if v:
                    rows.setdefault(r, {})[c] = v
        m = cls(nrows, len(cols))
        m._rows = rows
        return m

    @classmethod
    def from_dense(cls, data: Sequence[Sequence[int]], ncols: int | None = None):
        nrows = len(data)
        if ncols is None:
            ncols = len(data[0]) if nrows else 0
        rows = {}
        for r, row in enumerate(data):
            if len(row) != ncols:
                raise ValueError("ragged dense matrix")
            d = {c: int(v) for c, v in enumerate(row) if v}
            if d:
                rows[r] = d
        return cls._from_rows(nrows, ncols, rows)

    @classmethod
    def identity(cls, n: int):
        return cls._from_rows(n, n, {i: {i: 1} for i in range(n)})

    @classmethod
    def zeros(cls, nrows: int, ncols: int):
        return cls(nrows, ncols)

    @classmethod
    def column_vector(cls, vec: Sequence[int]):
        return cls._from_rows(len(vec), 1, {i: {0: int(v)} for i, v in enumerate(vec) if v})

    @staticmethod
    def hstack(mats: Sequence["IntMatrix"]) -> "IntMatrix":
        if not mats:
            raise ValueError("nothing to stack")
        nrows = mats[0].nrows
        rows: dict[int, dict[int, int]] = {}
        off = 0
        for m in mats:
            if m.nrows != nrows:
                raise ValueError("hstack: row counts differ")
            for r, d in m._rows.items():
                tgt = rows.setdefault(r, {})
                for c, v in d.items():
                    tgt[c + off] = v
            off += m.ncols
        return IntMatrix._from_rows(nrows, off, rows)

    @staticmethod
    def vstack(mats: Sequence["IntMatrix"]) -> "IntMatrix":
        if not mats:
            raise ValueError("nothing to stack")
        ncols = mats[0].ncols
        rows: dict[int, dict[int, int]] = {}
        off = 0
        for m in mats:
            if m.ncols != ncols:
                raise ValueError("vstack: column counts differ")
            for r, d in m._rows.items():
                rows[r + off] = dict(d)
            off += m.nrows
        return IntMatrix._from_rows(off, ncols, rows)

    # -- access ---------------------------------------------------------------
    @property
    def shape(self) -> tuple[int, int]:
        return (self.nrows, self.ncols)

    def __getitem__(self, rc) -> int:
        r, c = rc
        return self._rows.get(r, {}).get(c, 0)

    def entries(self) -> dict[tuple[int, int], int]:
        return {(r, c): v for r, d in self._rows.items() for c, v in d.items()}

    def triplets(self) -> list[tuple[int, int, int]]:
        return sorted((r, c, v) for r, d in self._rows.items() for c, v in d.items())

    def row(self, r: int) -> dict[int, int]:
        return dict(self._rows.get(r, {}))

    def rows_dict(self) -> dict[int, dict[int, int]]:
        return {r: dict(d) for r, d in self._rows.items()}

    def columns(self) -> list[dict[int, int]]:
        cols: list[dict[int, int]] = [{} for _ in range(self.ncols)]
        for r, d in self._rows.items():
            for c, v in d.items():
                cols[c][r] = v
        return cols

    def column(self, c: int) -> list[int]:
        out = [0] * self.nrows
        for r, d in self._rows.items():
            v = d.get(c)
            if v:
                out[r] = v
        return out

    @property
    def nnz(self) -> int:
        return sum(len(d) for d in self._rows.values())

    def is_zero(self) -> bool:
        return not self._rows

    def to_dense(self) -> list[list[int]]:
        out = [[0] * self.ncols for _ in range(self.nrows)]
        for r, d in self._rows.items():
            for c, v in d.items():
                out[r][c] = v
        return out

    def select_columns(self, cols: Sequence[int]) -> "IntMatrix":
        pos = {c: i for i, c in enumerate(cols)}
        rows = {}
        for r, d in self._rows.items():
            nd = {pos[c]: v for c, v in d.items() if c in pos}
            if nd:
                rows[r] = nd
        return IntMatrix._from_rows(self.nrows, len(cols), rows)

    def select_rows(self, rows_: Sequence[int]) -> "IntMatrix":
        rows = {i: dict(self._rows[r]) for i, r in enumerate(rows_) if r in self._rows}
        return IntMatrix._from_rows(len(rows_), self.ncols, rows)

    # -- arithmetic -------------------------------------------------------------
    def transpose(self) -> "IntMatrix":
        rows: dict[int, dict[int, int]] = {}
        for r, d in self._rows.items():
            for c, v in d.items():
                rows.setdefault(c, {})[r] = v
        return IntMatrix._from_rows(self.ncols, self.nrows, rows)

    @property
    def T(self) -> "IntMatrix":
        return self.transpose()

    def __matmul__(self, other):
        if isinstance(other, IntMatrix):
            if self.ncols != other.nrows:
                raise ValueError(f"shape mismatch {self.shape} @ {other.shape}")
            orows = other._rows
            rows = {}
            for r, d in self._rows.items():
                acc: dict[int, int] = {}
                for k, a in d.items():
                    od = orows.get(k)
                    if od:
                        for c, b in od.items():
                            acc[c] = acc.get(c, 0) + a * b
                acc = {c: v for c, v in acc.items() if v}
                if acc:
                    rows[r] = acc
            return IntMatrix._from_rows(self.nrows, other.ncols, rows)
        vec = list(other)
        if len(vec) != self.ncols:
            raise ValueError("vector length mismatch")
        out = [0] * self.nrows
        for r, d in self._rows.items():
            out[r] = sum(v * vec[c] for c, v in d.items())
        return out

    def apply_sparse(self, vec: Mapping[int, int]) -> dict[int, int]:
        """Multiply by a sparse column vector given as {index: value}."""
        out: dict[int, int] = {}
        if not vec:
            return out
        for r, d in self._rows.items():
            s = 0
            for c, v in d.items():
                x = vec.get(c)
                if x:
                    s += v * x
            if s:
                out[r] = s
        return out

    def _combine(self, other: "IntMatrix", sign: int) -> "IntMatrix":
        if self.shape != other.shape:
            raise ValueError("shape mismatch")
        rows = self.rows_dict()
        for r, d in other._rows.items():
            tgt = rows.setdefault(r, {})
            _axpy(tgt, d, sign)
        return IntMatrix._from_rows(self.nrows, self.ncols, rows)

    def __add__(self, other):
        return self._combine(other, 1)

    def __sub__(self, other):
        return self._combine(other, -1)

    def __neg__(self):
        return IntMatrix._from_rows(self.nrows, self.ncols,
                                    {r: {c: -v for c, v in d.items()} for r, d in self._rows.items()})

    def __mul__(self, k: int):
        if not isinstance(k, int):
            return NotImplemented
        if k == 0:
            return IntMatrix(self.nrows, self.ncols)
        return IntMatrix._from_rows(self.nrows, self.ncols,
                                    {r: {c: k * v for c, v in d.items()} for r, d in self._rows.items()})

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, IntMatrix):
            return NotImplemented
        return self.shape == other.shape and self._rows == other._rows

    def __hash__(self):
        return hash((self.shape, tuple(self.triplets())))

    def __repr__(self):
        if self.nrows * self.ncols <= 64:
            return f"IntMatrix({self.to_dense()})"
        return f"IntMatrix<{self.nrows}x{self.ncols}, nnz={self.nnz}>"


# ---------------------------------------------------------------------------
# Smith reduction


class _Reducer:
    """In-place Smith reduction of a sparse matrix with optional bookkeeping."""

    def __init__(self, m: IntMatrix, track: bool = False, inverses: bool = False):
        self.m, self.n = m.nrows, m.ncols
        self.rows: dict[int, dict[int, int]] = m.rows_dict()
        self.cols: dict[int, set[int]] = defaultdict(set)
        for r, d in self.rows.items():
            for c in d:
                self.cols[c].add(r)
        self.track = track
        self.inverses = inverses and track
        if track:
            self.U = {r: {r: 1} for r in range(self.m)}          # rows of U
            self.V = {c: {c: 1} for c in range(self.n)}          # columns of V
        if self.inverses:
            self.Uinv = {r: {r: 1} for r in range(self.m)}       # columns of U^-1
            self.Vinv = {c: {c: 1} for c in range(self.n)}       # rows of V^-1
        self.unit_pivots: list[tuple[int, int]] = []
        self.dense_rows: list[int] = []
        self.dense_cols: list[int] = []
        self.dense_diag: list[int] = []

    # bookkeeping for elementary operations ---------------------------------
    def _track_row_add(self, dst: int, src: int, f: int) -> None:
        """Record row[dst] += f * row[src]."""
        _axpy(self.U[dst], self.U[src], f)
        if self.inverses:
            _axpy(self.Uinv[src], self.Uinv[dst], -f)

    def _track_col_add(self, dst: int, src: int, f: int) -> None:
        """Record col[dst] += f * col[src]."""
        _axpy(self.V[dst], self.V[src], f)
        if self.inverses:
            _axpy(self.Vinv[src], self.Vinv[dst], -f)

    def _track_row_neg(self, r: int) -> None:
        self.U[r] = {k: -v for k, v in self.U[r].items()}
        if self.inverses:
            self.Uinv[r] = {k: -v for k, v in self.Uinv[r].items()}

    # phase 1 -------------------------------------------------------------------
    def _sparse_row_add(self, dst: int, src: int, f: int) -> None:
        drow = self.rows.setdefault(dst, {})
        for c, v in self.rows[src].items():
            nv = drow.get(c, 0) + f * v
            if nv:
                if c not in drow:
                    self.cols[c].add(dst)
                drow[c] = nv
            elif c in drow:
                del drow[c]
                self.cols[c].discard(dst)
        if not drow:
            del self.rows[dst]
        if self.track:
            self._track_row_add(dst, src, f)

    def unit_phase(self) -> None:
        rows, cols = self.rows, self.cols
        heap = [(len(d), r) for r, d in rows.items()]
        heapq.heapify(heap)
        while heap:
            ln, r = heapq.heappop(heap)
            d = rows.get(r)
            if d is None:
                continue
            if len(d) != ln:
                heapq.heappush(heap, (len(d), r))
                continue
            best = None
            for c, v in d.items():
                if v == 1 or v == -1:
                    key = (len(cols[c]), c)
                    if best is None or key < best[0]:
                        best = (key, c)
            if best is None:
                continue
            c = best[1]
            p = d[c]
            for r2 in sorted(cols[c]):
                if r2 == r:
                    continue
                self._sparse_row_add(r2, r, -rows[r2][c] * p)
                if r2 in rows:
                    heapq.heappush(heap, (len(rows[r2]), r2))
            # clear the pivot row by column operations, then retire it
            if self.track:
                for c2, v in d.items():
                    if c2 != c:
                        self._track_col_add(c2, c, -v * p)
                if p == -1:
                    self._track_row_neg(r)
            for c2 in d:
                cols[c2].discard(r)
                if not cols[c2]:
                    del cols[c2]
            del rows[r]
            self.unit_pivots.append((r, c))

    # phase 2 -------------------------------------------------------------------
    def dense_phase(self) -> None:
        R = sorted(self.rows)
        C = sorted({c for d in self.rows.values() for c in d})
        if not R:
            return
        A = [[self.rows[r].get(c, 0) for c in C] for r in R]
        m, n = len(R), len(C)
        track = self.track

        def row_add(dst, src, f):
            if not f:
                return
            rd, rs = A[dst], A[src]
            for j in range(n):
                if rs[j]:
                    rd[j] += f * rs[j]
            if track:
                self._track_row_add(R[dst], R[src], f)

        def col_add(dst, src, f):
            if not f:
                return
            for i in range(m):
                if A[i][src]:
                    A[i][dst] += f * A[i][src]
            if track:
                self._track_col_add(C[dst], C[src], f)

        def swap_rows(i, j):
            if i != j:
                A[i], A[j] = A[j], A[i]
                R[i], R[j] = R[j], R[i]

        def swap_cols(i, j):
            if i != j:
                for row in A:
                    row[i], row[j] = row[j], row[i]
                C[i], C[j] = C[j], C[i]

        t = 0
        diag = []
        while t < min(m, n):
            best = None
            for i in range(t, m):
                row = A[i]
                for j in range(t, n):
                    v = row[j]
                    if v and (best is None or abs(v) < best[0]):
                        best = (abs(v), i, j)
            if best is None:
                break
            swap_rows(t, best[1])
            swap_cols(t, best[2])
            while True:
                p = A[t][t]
                for i in range(t + 1, m):
                    if A[i][t]:
                        row_add(i, t, -(A[i][t] // p))
                for j in range(t + 1, n):
                    if A[t][j]:
                        col_add(j, t, -(A[t][j] // p))
                rest = [(abs(A[i][t]), i, t) for i in range(t + 1, m) if A[i][t]]
                rest += [(abs(A[t][j]), t, j) for j in range(t + 1, n) if A[t][j]]
                if rest:
                    _, i, j = min(rest)
                    swap_rows(t, i)
                    swap_cols(t, j)
                    continue
                bad = None
                for i in range(t + 1, m):
                    for j in range(t + 1, n):
                        if A[i][j] % p:
                            bad = i
                            break
                    if bad is not None:
                        break
                if bad is None:
                    break
                row_add(t, bad, 1)
            if A[t][t] < 0:
                A[t] = [-x for x in A[t]]
                if track:
                    self._track_row_neg(R[t])
            diag.append(A[t][t])
            t += 1
        self.dense_rows, self.dense_cols, self.dense_diag = R, C, diag

    def run(self) -> "_Reducer":
        self.unit_phase()
        self.dense_phase()
        return self

    def diagonal(self) -> list[int]:
        return [1] * len(self.unit_pivots) + self.dense_diag

    def orders(self) -> tuple[list[int], list[int]]:
        rk = len(self.unit_pivots) + len(self.dense_diag)
        r_order = [r for r, _ in self.unit_pivots] + self.dense_rows
        c_order = [c for _, c in self.unit_pivots] + self.dense_cols
        r_order = r_order[:rk] + sorted(set(range(self.m)) - set(r_order[:rk]))
        c_order = c_order[:rk] + sorted(set(range(self.n)) - set(c_order[:rk]))
        return r_order, c_order


@dataclass
class SmithForm:
    """``U @ M @ V == D`` with ``D`` diagonal, ``d_1 | d_2 | ...``, entries > 0."""
    U: IntMatrix
    D: IntMatrix
    V: IntMatrix
    U_inv: IntMatrix | None = None
    V_inv: IntMatrix | None = None
    diagonal: tuple[int, ...] = ()

    @property
    def rank(self) -> int:
        return len(self.diagonal)

    @property
    def invariant_factors(self) -> tuple[int, ...]:
        return self.diagonal

    @property
    def torsion(self) -> tuple[int, ...]:
        return tuple(d for d in self.diagonal if d > 1)

    def certify(self, M: IntMatrix) -> bool:
        """Exact check of the decomposition, divisibility and unimodularity."""
        if self.U @ M @ self.V != self.D:
            return False
        d = self.diagonal
        if any(x <= 0 for x in d) or any(d[i + 1] % d[i] for i in range(len(d) - 1)):
            return False
        if self.U_inv is not None:
            if self.U @ self.U_inv != IntMatrix.identity(self.U.nrows):
                return False
        if self.V_inv is not None:
            if self.V @ self.V_inv != IntMatrix.identity(self.V.nrows):
                return False
        return True

    def kernel_basis(self) -> IntMatrix:
        """Columns spanning ker M (a saturated sublattice)."""
        return self.V.select_columns(range(self.rank, self.V.ncols))

    def solve(self, b: Sequence[int]) -> list[int] | None:
        """Some integral ``x`` with ``M x = b``, or None if there is none."""
        ub = self.U @ list(b)
        y = [0] * self.V.nrows
        for j, d in enumerate(self.diagonal):
            q, rem = divmod(ub[j], d)
            if rem:
                return None
            y[j] = q
        if any(ub[j] for j in range(self.rank, len(ub))):
            return None
        return self.V @ y


def smith_normal_form(M: IntMatrix, inverses: bool = False) -> SmithForm:
    """Smith normal form with unimodular transforms.

    >>> smith_normal_form(IntMatrix.from_dense([[2, 4], [6, 8]])).diagonal
    (2, 4)
    """
    red = _Reducer(M, track=True, inverses=inverses).run()
    diag = red.diagonal()
    r_order, c_order = red.orders()
    U = IntMatrix._from_rows(M.nrows, M.nrows, {i: red.U[r] for i, r in enumerate(r_order)})
    V = IntMatrix._from_columns(M.ncols, [red.V[c] for c in c_order])
    D = IntMatrix._from_rows(M.nrows, M.ncols, {i: {i: d} for i, d in enumerate(diag)})
    U_inv = V_inv = None
    if red.inverses:
        U_inv = IntMatrix._from_columns(M.nrows, [red.Uinv[r] for r in r_order])
        V_inv = IntMatrix._from_rows(M.ncols, M.ncols, {i: red.Vinv[c] for i, c in enumerate(c_order)})
    return SmithForm(U, D, V, U_inv, V_inv, tuple(diag))


def invariant_factors(M: IntMatrix) -> tuple[int, ...]:
    """Nonzero Smith diagonal of ``M`` (no transforms are formed)."""
    return tuple(_Reducer(M).run().diagonal())


def rank(M: IntMatrix) -> int:
    return len(invariant_factors(M))


def rank_fraction_free(M: IntMatrix) -> int:
    """Rank over Q by Bareiss fraction-free elimination (independent of the SNF path)."""
    A = M.to_dense()
    m, n = M.nrows, M.ncols
    r = 0
    prev = 1
    for c in range(n):
        piv = next((i for i in range(r, m) if A[i][c]), None)
        if piv is None:
            continue
        A[r], A[piv] = A[piv], A[r]
        p = A[r][c]
        for i in range(r + 1, m):
            a = A[i][c]
            row_i, row_r = A[i], A[r]
            for j in range(c, n):
                row_i[j] = (p * row_i[j] - a * row_r[j]) // prev
        prev = p
        r += 1
        if r == m:
            break
    return r


def determinant(M: IntMatrix) -> int:
    """Bareiss determinant of a square matrix."""
    if M.nrows != M.ncols:
        raise ValueError("determinant of a non-square matrix")
    A = M.to_dense()
    n = M.nrows
    sign, prev = 1, 1
    for k in range(n):
        piv = next((i for i in range(k, n) if A[i][k]), None)
        if piv is None:
            return 0
        if piv != k:
            A[k], A[piv] = A[piv], A[k]
            sign = -sign
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                A[i][j] = (A[i][j] * A[k][k] - A[i][k] * A[k][j]) // prev
        prev = A[k][k]
    return sign * (A[n - 1][n - 1] if n else 1)


def kernel_basis(M: IntMatrix) -> IntMatrix:
    return smith_normal_form(M).kernel_basis()


def solve_in_image(M: IntMatrix, b: Sequence[int]) -> list[int] | None:
    """An integral solution of ``M x = b`` or None when none exists.

    >>> solve_in_image(IntMatrix.from_dense([[2]]), [4])
    [2]
    >>> solve_in_image(IntMatrix.from_dense([[2]]), [3]) is None
    True
    """
    if len(b) != M.nrows:
        raise ValueError("right-hand side has the wrong length")
    return smith_normal_form(M).solve(b)


# ---------------------------------------------------------------------------
# homology


@dataclass(frozen=True)
class HomologyGroup:
    """Z^betti + Z/t_1 + ... + Z/t_r with t_1 | t_2 | ... | t_r, all t_i > 1."""
    betti: int = 0
    torsion: tuple[int, ...] = ()

    def __post_init__(self):
        object.__setattr__(self, "torsion", tuple(int(t) for t in self.torsion))
        if self.betti < 0 or any(t <= 1 for t in self.torsion):
            raise ValueError(f"invalid homology data {self.betti}, {self.torsion}")
        ts = self.torsion
        if any(ts[i + 1] % ts[i] for i in range(len(ts) - 1)):
            raise ValueError("torsion coefficients must form a divisibility chain")

    def is_zero(self) -> bool:
        return self.betti == 0 and not self.torsion

    def to_dict(self) -> dict:
        return {"betti": self.betti, "torsion": list(self.torsion)}

    @classmethod
    def from_dict(cls, d: Mapping) -> "HomologyGroup":
        return cls(int(d["betti"]), tuple(d.get("torsion", ())))

    def __str__(self):
        parts = []
        if self.betti:
            parts.append("Z" if self.betti == 1 else f"Z^{self.betti}")
        parts += [f"Z/{t}" for t in self.torsion]
        return " + ".join(parts) if parts else "0"


def homology_of_pair(d_in: IntMatrix, d_out: IntMatrix, check: bool = True) -> HomologyGroup:
    """H = ker(d_out) / im(d_in) for ``d_in: C_{i+1} -> C_i``, ``d_out: C_i -> C_{i-1}``.

    Since ker(d_out) is saturated in C_i, the torsion of the quotient equals
    the torsion of coker(d_in), i.e. the invariant factors > 1 of ``d_in``.
    """
    if d_in.nrows != d_out.ncols:
        raise ChainComplexError(f"incompatible shapes {d_in.shape} and {d_out.shape}")
    if check and not (d_out @ d_in).is_zero():
        raise ChainComplexError("d_out @ d_in != 0")
    inv = invariant_factors(d_in)
    r_out = rank(d_out)
    return HomologyGroup(d_in.nrows - r_out - len(inv), tuple(t for t in inv if t > 1))


@dataclass
class InducedMap:
    """A chain map on homology, in Smith-adapted bases."""
    source: HomologyGroup
    target: HomologyGroup
    free_matrix: IntMatrix
    injective: bool
    surjective: bool

    @property
    def isomorphism(self) -> bool:
        return self.injective and self.surjective


class _CycleCoordinates:
    """Coordinates of cycles in a lattice basis of ker(d_out), plus the
    presentation matrix of boundaries in those coordinates."""

    def __init__(self, d_in: IntMatrix, d_out: IntMatrix):
        if d_in.nrows != d_out.ncols:
            raise ChainComplexError("incompatible shapes")
        if not (d_out @ d_in).is_zero():
            raise ChainComplexError("d_out @ d_in != 0")
        self.d_out = d_out
        snf = smith_normal_form(d_out, inverses=True)
        self.n = d_out.ncols
        self.rk = snf.rank
        self.K = snf.kernel_basis()
        self.coord = snf.V_inv.select_rows(range(self.rk, self.n))
        self.B = self.coord @ d_in
        self.snf_B = smith_normal_form(self.B, inverses=True)
        r = self.B.nrows
        inv = self.snf_B.diagonal
        self.group = HomologyGroup(r - len(inv), tuple(t for t in inv if t > 1))

    @property
    def r(self) -> int:
        return self.n - self.rk


def induced_on_homology(f: IntMatrix, source_in: IntMatrix, source_out: IntMatrix,
                        target_in: IntMatrix, target_out: IntMatrix) -> InducedMap:
    """Map induced on H_i by ``f: C_i -> C'_i``.

    ``source_in``/``source_out`` are the differentials into and out of C_i,
    likewise for the target.  Raises ChainComplexError unless ``f`` carries
    cycles to cycles and boundaries to boundaries.
    """
    src = _CycleCoordinates(source_in, source_out)
    tgt = _CycleCoordinates(target_in, target_out)
    if f.shape != (tgt.n, src.n):
        raise ChainComplexError(f"chain map has shape {f.shape}, expected {(tgt.n, src.n)}")
    fK = f @ src.K
    if not (target_out @ fK).is_zero():
        raise ChainComplexError("chain map does not send cycles to cycles")
    F = tgt.coord @ fK                                   # r' x r
    FB = F @ src.B
    for col in FB.columns():
        vec = [col.get(i, 0) for i in range(F.nrows)]
        if tgt.snf_B.solve(vec) is None:
            raise ChainComplexError("chain map does not send boundaries to boundaries")
    # free part in adapted coordinates: y = P x
    P_t, rk_t = tgt.snf_B.U, tgt.snf_B.rank
    Pinv_s, rk_s = src.snf_B.U_inv, src.snf_B.rank
    adapted = P_t @ F @ Pinv_s
    free = adapted.select_rows(range(rk_t, tgt.r)).select_columns(range(rk_s, src.r))
    # injective: {x : F x in im B'} == im B
    injective = True
    if src.r:
        stacked = IntMatrix.hstack([F, -tgt.B]) if tgt.B.ncols else F
        if tgt.r == 0:
            gens = IntMatrix.identity(src.r)
        else:
            ker = kernel_basis(stacked)
            gens = ker.select_rows(range(src.r))
        for col in gens.columns():
            vec = [col.get(i, 0) for i in range(src.r)]
            if any(vec) and src.snf_B.solve(vec) is None:
                injective = False
                break
    surjective = True
    if tgt.r:
        both = IntMatrix.hstack([F, tgt.B]) if tgt.B.ncols else F
        inv = invariant_factors(both)
        surjective = len(inv) == tgt.r and all(d == 1 for d in inv)
    return InducedMap(src.group, tgt.group, free, injective, surjective)


def rational_rank_on_homology(f: IntMatrix, source_in: IntMatrix, source_out: IntMatrix,
                              target_in: IntMatrix) -> int:
    """dim_Q of the image of ``f`` on H_i with rational coefficients."""
    K = kernel_basis(source_out)
    fK = f @ K
    if target_in.ncols == 0:
        return rank(fK)
    return rank(IntMatrix.hstack([fK, target_in])) - rank(target_in)


def gcd_list(values: Iterable[int]) -> int:
    g = 0
    for v in values:
        g = gcd(g, v)
    return g
