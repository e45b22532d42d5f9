"""Exact scalar fields: the prime fields GF(p) and the rationals.

Arrays over GF(p) are ``int64`` numpy arrays holding residues ``0..p-1``.
Arrays over Q are ``object`` arrays of :class:`fractions.Fraction`.  Every
public routine returns arrays in this canonical form.
"""

from __future__ import annotations

import math
from dataclasses import dataclass
from fractions import Fraction
from functools import cached_property
from itertools import product

import numpy as np

MAX_PRIME = 97


class FieldError(ValueError):
    pass


def _is_prime(n: int) -> bool:
    if n < 2:
        return False
    return all(n % d for d in range(2, int(n**0.5) + 1))


@dataclass(frozen=True)
class FieldSpec:
    """The base field, identified by its characteristic (0 means Q)."""

    characteristic: int

    def __post_init__(self):
        c = self.characteristic
        if c != 0 and not (_is_prime(c) and c <= MAX_PRIME):
            raise FieldError(f"characteristic must be 0 or a prime <= {MAX_PRIME}, got {c}")

    def __repr__(self):
        return "Q" if self.characteristic == 0 else f"GF({self.characteristic})"

    __str__ = __repr__

    @property
    def is_finite(self) -> bool:
        return self.characteristic > 0

    @property
    def p(self) -> int:
        return self.characteristic

    @property
    def order(self) -> int:
        if not self.is_finite:
            raise FieldError("Q is infinite")
        return self.characteristic

    @property
    def dtype(self):
        return np.int64 if self.is_finite else object

    # -- scalars -----------------------------------------------------------

    def scalar(self, x):
        if self.is_finite:
            if isinstance(x, Fraction):
                return int(x.numerator % self.p) * pow(x.denominator, -1, self.p) % self.p
            return int(x) % self.p
        return Fraction(x)

    def inv(self, x):
        x = self.scalar(x)
        if x == 0:
            raise ZeroDivisionError("inverse of zero")
        if self.is_finite:
            return pow(int(x), self.p - 2, self.p)
        return 1 / x

    def is_zero(self, x) -> bool:
        return self.scalar(x) == 0

    def parse(self, text: str):
        """Parse the string form of a scalar ("3", "-2/5" over Q; a residue over GF(p))."""
        text = text.strip()
        try:
            value = Fraction(text)
        except (ValueError, ZeroDivisionError) as exc:
            raise FieldError(f"bad scalar {text!r}") from exc
        if self.is_finite:
            if value.denominator != 1:
                raise FieldError(f"GF({self.p}) scalar must be an integer residue, got {text!r}")
            return int(value.numerator) % self.p
        return value

    def format(self, x) -> str:
        x = self.scalar(x)
        if self.is_finite:
            return str(int(x))
        return str(x)

    # -- arrays ------------------------------------------------------------

    def canon(self, arr) -> np.ndarray:
        """Return ``arr`` as a canonical array over this field."""
        if self.is_finite:
            a = np.asarray(arr)
            if a.dtype == object:
                a = np.vectorize(self.scalar, otypes=[np.int64])(a) if a.size else a.astype(np.int64)
            return np.mod(a.astype(np.int64, copy=False), self.p)
        a = np.asarray(arr, dtype=object)
        if a.size:
            flat = a.reshape(-1)
            for i, v in enumerate(flat):
                if not isinstance(v, Fraction):
                    flat[i] = Fraction(v)
        return a

    def zeros(self, shape) -> np.ndarray:
        if self.is_finite:
            return np.zeros(shape, dtype=np.int64)
        a = np.empty(shape, dtype=object)
        a.fill(Fraction(0))
        return a

    def identity(self, n: int) -> np.ndarray:
        a = self.zeros((n, n))
        for i in range(n):
            a[i, i] = self.scalar(1)
        return a

    def unit_vector(self, n: int, i: int) -> np.ndarray:
        v = self.zeros(n)
        v[i] = self.scalar(1)
        return v

    def dot(self, a, b) -> np.ndarray:
        return self.canon(np.asarray(a) @ np.asarray(b))

    def einsum(self, spec: str, *ops) -> np.ndarray:
        if self.is_finite:
            ops = [np.asarray(o) for o in ops]
            if self._may_overflow(spec, ops):
                out = np.einsum(spec, *(o.astype(object) for o in ops), optimize=True)
                return np.mod(np.asarray(out, dtype=object), self.p).astype(np.int64)
            return np.mod(np.einsum(spec, *ops, optimize=True), self.p)
        return self._rational_einsum(spec, [self.canon(o) for o in ops])

    def _rational_einsum(self, spec: str, ops) -> np.ndarray:
        # clear denominators per operand, contract integers, divide once
        nums, denom, bound = [], 1, 1
        for o in ops:
            flat = o.reshape(-1)
            lcm = math.lcm(*(v.denominator for v in flat)) if flat.size else 1
            ints = np.array([v.numerator * (lcm // v.denominator) for v in flat], dtype=object).reshape(o.shape)
            peak = max((abs(v) for v in ints.reshape(-1).tolist()), default=0)
            nums.append(ints)
            denom *= lcm
            bound *= max(peak, 1)
        if bound * self._contracted_terms(spec, ops) < 2**62:
            nums = [n.astype(np.int64) for n in nums]
        out = np.asarray(np.einsum(spec, *nums, optimize=True))
        res = np.empty(out.shape, dtype=object)
        rflat = res.reshape(-1)
        for i, v in enumerate(out.reshape(-1).tolist()):
            rflat[i] = Fraction(v, denom)
        return res

    @staticmethod
    def _contracted_terms(spec: str, ops) -> int:
        inputs, _, output = spec.partition("->")
        sizes = {}
        for term, op in zip(inputs.split(","), ops):
            sizes.update(zip(term, op.shape))
        terms = 1
        for letter, size in sizes.items():
            if letter not in output:
                terms *= size
        return terms

    def _may_overflow(self, spec: str, ops) -> bool:
        # worst case: every term is (p-1)^k, summed over all contracted indices
        return (self.p - 1) ** len(ops) * self._contracted_terms(spec, ops) >= 2**62

    # -- finite enumeration -----------------------------------------------

    @cached_property
    def elements(self) -> tuple:
        return tuple(range(self.order))

    def all_vectors(self, n: int) -> np.ndarray:
        """Every vector of GF(p)^n, row ``i`` being the base-p digits of ``i``."""
        p = self.order
        idx = np.arange(p**n, dtype=np.int64)
        out = np.empty((p**n, n), dtype=np.int64)
        for j in range(n - 1, -1, -1):
            out[:, j] = idx % p
            idx //= p
        return out

    def encode(self, vectors: np.ndarray) -> np.ndarray:
        """Inverse of :meth:`all_vectors`: map rows to integer codes."""
        p = self.order
        vectors = np.atleast_2d(vectors)
        weights = p ** np.arange(vectors.shape[1] - 1, -1, -1, dtype=np.int64)
        return vectors @ weights

    def iter_vectors(self, n: int):
        yield from product(self.elements, repeat=n)


GF2 = FieldSpec(2)
GF3 = FieldSpec(3)
QQ = FieldSpec(0)
