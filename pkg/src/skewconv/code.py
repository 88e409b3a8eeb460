"""Skew convolutional codes: validation, period, encoding, scalar generator
windows, and regrouping into an equivalent fixed code.

A code is given by a k x n polynomial generator matrix G(D) = G_0 + G_1 D +
... + G_mu D^mu over F[D; theta].  Encoding is the twisted convolution

    v_t = sum_i u_{t-i} * theta^(t-i)(G_i),   u_t = 0 for t < 0,

so the encoder coefficients are periodic in t with the code period.
"""

import numpy as np

from .field import FieldElement
from .linalg import f_rank
from .skewpoly import SkewPoly, SkewPolyMatrix

__all__ = ["Sequence", "SkewConvCode"]


class Sequence:
    """Causal sequence of fixed-width blocks of field elements, time 0, 1, ..."""

    __slots__ = ("field", "blocks", "width")

    def __init__(self, field, blocks, width=None):
        norm = []
        for t, block in enumerate(blocks):
            if isinstance(block, (FieldElement, int)):
                block = (block,)
            vals = []
            for c in block:
                if isinstance(c, FieldElement):
                    if c.field is not field and c.field != field:
                        raise ValueError("mixed-field operands")
                    vals.append(c.value)
                else:
                    v = int(c)
                    if not 0 <= v < field.size:
                        raise ValueError(f"block {t}: symbol {v} outside [0, {field.size})")
                    vals.append(v)
            if width is None:
                width = len(vals)
            if len(vals) != width:
                raise ValueError(f"block {t} has length {len(vals)}, expected {width}")
            norm.append(tuple(FieldElement(field, v) for v in vals))
        object.__setattr__(self, "field", field)
        object.__setattr__(self, "blocks", tuple(norm))
        object.__setattr__(self, "width", width)

    def __setattr__(self, name, value):
        raise AttributeError("Sequence is immutable")

    def __len__(self):
        return len(self.blocks)

    def __iter__(self):
        return iter(self.blocks)

    def __getitem__(self, t):
        return self.blocks[t]

    def to_ints(self):
        return [tuple(c.value for c in block) for block in self.blocks]

    def flat_values(self):
        return [c.value for block in self.blocks for c in block]

    def weight(self):
        return sum(1 for block in self.blocks for c in block if c.value)

    def __add__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        if len(self) != len(other) or self.width != other.width:
            raise ValueError("shape mismatch")
        f = self.field
        return Sequence(
            f,
            [
                [f.add_int(a.value, b.value) for a, b in zip(x, y)]
                for x, y in zip(self.blocks, other.blocks)
            ],
            width=self.width,
        )

    def scale(self, c):
        """Left scalar multiple c * sequence."""
        f = self.field
        cv = c.value if isinstance(c, FieldElement) else int(c)
        return Sequence(
            f,
            [[f.mul_int(cv, a.value) for a in block] for block in self.blocks],
            width=self.width,
        )

    def __rmul__(self, c):
        if isinstance(c, (FieldElement, int)):
            return self.scale(c)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, Sequence):
            return NotImplemented
        return self.to_ints() == other.to_ints()

    def __hash__(self):
        return hash(tuple(self.flat_values()))

    def __repr__(self):
        return "Sequence[" + ", ".join(
            "(" + " ".join(self.field.element_name(c.value) for c in b) + ")"
            for b in self.blocks
        ) + "]"


def _twist_matrix(field, mat, power):
    return [[field.frobenius_int(v, power) for v in row] for row in mat]


class SkewConvCode:
    """[n, k] skew convolutional code with polynomial generator matrix G(D)."""

    def __init__(self, generator, validate=True):
        if not isinstance(generator, SkewPolyMatrix):
            raise ValueError("generator must be a SkewPolyMatrix")
        self.generator = generator
        self.field = generator.field
        self.k = generator.rows
        self.n = generator.cols
        if self.k > self.n:
            raise ValueError(f"k={self.k} exceeds n={self.n}")
        if generator.is_zero:
            raise ValueError("generator matrix is zero")
        self.memory = int(max(generator.degree, 0))
        self.row_degrees = generator.row_degrees()
        self.external_degree = sum(self.row_degrees)
        # coefficient matrices G_0..G_mu as integer tables
        self._coeff = [generator.coefficient_values(i) for i in range(self.memory + 1)]
        self.period = self._compute_period()
        # phase cache: _phase_coeff[s][i] = theta^(s-i)(G_i), valid at times t = s mod period
        self._phase_coeff = [
            [_twist_matrix(self.field, self._coeff[i], s - i) for i in range(self.memory + 1)]
            for s in range(self.period)
        ]
        if validate:
            self._check_full_rank()

    def _compute_period(self):
        order = self.field.automorphism_order
        for i in range(1, order + 1):
            if order % i:
                continue
            if all(
                _twist_matrix(self.field, g, i) == g for g in self._coeff
            ):
                return i
        return order

    def _check_full_rank(self):
        t_rows = self.period * (self.memory + 1)
        window = self.scalar_generator(t_rows)
        if f_rank(self.field, window) != t_rows * self.k:
            raise ValueError("generator matrix is rank-deficient on its scalar window")

    # -- encoding -------------------------------------------------------

    def coerce_sequence(self, u, width):
        if isinstance(u, Sequence):
            if u.width not in (None, width):
                raise ValueError(f"blocks have length {u.width}, expected {width}")
            if u.field != self.field:
                raise ValueError("mixed-field operands")
            return u
        return Sequence(self.field, u, width=width)

    def encode(self, u, terminate=False):
        """Encode an information sequence; terminate appends `memory` zero
        blocks so the path returns to the zero state."""
        u = self.coerce_sequence(u, self.k)
        f = self.field
        total = len(u) + (self.memory if terminate else 0)
        ublocks = u.to_ints()
        out = []
        for t in range(total):
            acc = [0] * self.n
            coeffs = self._phase_coeff[t % self.period]
            for i in range(self.memory + 1):
                s = t - i
                if not 0 <= s < len(ublocks):
                    continue
                mat = coeffs[i]
                for row, usym in enumerate(ublocks[s]):
                    if usym == 0:
                        continue
                    for j in range(self.n):
                        g = mat[row][j]
                        if g:
                            acc[j] = f.add_int(acc[j], f.mul_int(usym, g))
            out.append(acc)
        return Sequence(f, out, width=self.n)

    def time_coefficient(self, t, i):
        """Encoder coefficient theta^(t-i)(G_i) at time t as an integer table."""
        if not 0 <= i <= self.memory:
            raise ValueError(f"delay {i} outside [0, {self.memory}]")
        return [row[:] for row in self._phase_coeff[t % self.period][i]]

    # -- scalar (semi-infinite) generator windows -------------------------

    def scalar_generator(self, t_rows, form="standard"):
        """First t_rows block rows of the scalar generator matrix.

        Block row t carries theta^t(G_i) at block column t+i.  The "tilde"
        form re-parameterizes via G_i = theta^i(G~_i), putting theta^(t+i)(G~_i)
        at the same position; both span the same row space.
        """
        if t_rows < 1:
            raise ValueError("t_rows must be >= 1")
        if form not in ("standard", "tilde"):
            raise ValueError(f"unknown form {form!r}")
        f = self.field
        k, n, mu = self.k, self.n, self.memory
        out = np.zeros((t_rows * k, (t_rows + mu) * n), dtype=np.int64)
        for t in range(t_rows):
            for i in range(mu + 1):
                if form == "standard":
                    block = _twist_matrix(f, self._coeff[i], t)
                else:
                    tilde = _twist_matrix(f, self._coeff[i], -i)
                    block = _twist_matrix(f, tilde, t + i)
                out[t * k : (t + 1) * k, (t + i) * n : (t + i + 1) * n] = block
        return out

    # -- regrouping into an equivalent fixed code -------------------------

    def tau_block(self):
        """Polynomial generator matrix of the equivalent fixed code obtained
        by regrouping `period` consecutive blocks."""
        tau = self.period
        if tau == 1:
            return self.generator
        f = self.field
        k, n, mu = self.k, self.n, self.memory
        blocked_memory = (mu + tau - 1) // tau
        coeff_mats = []
        for j in range(blocked_memory + 1):
            big = [[0] * (tau * n) for _ in range(tau * k)]
            for a in range(tau):
                for b in range(tau):
                    i = b - a + j * tau
                    if not 0 <= i <= mu:
                        continue
                    block = _twist_matrix(f, self._coeff[i], a)
                    for r in range(k):
                        for c in range(n):
                            big[a * k + r][b * n + c] = block[r][c]
            coeff_mats.append(big)
        return SkewPolyMatrix.from_coefficients(f, coeff_mats)

    def __repr__(self):
        return (
            f"SkewConvCode(k={self.k}, n={self.n}, memory={self.memory}, "
            f"period={self.period}, field={self.field!r})"
        )
