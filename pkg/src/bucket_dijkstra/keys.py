"""Order-preserving maps from weights and distances onto unsigned bucket keys.

Three codecs are supported:

``int``
    Integer weights pass through unchanged. The key space defaults to 2**32.
``f32``
    Values are narrowed to IEEE-754 binary32 and the key is the bit pattern of
    the (non-negative) float read as an unsigned integer. For non-negative
    floats the bit pattern is ``exponent * 2**23 + mantissa``, which is exactly
    the number of admissible float32 values below ``x``, so the map is a
    strictly increasing bijection onto ``[0, 0x7F800000)``.
``quant:<mantissa_bits>:<exponent_bits>``
    A reduced-precision float format with subnormals and no infinities. Every
    exponent code is finite, so the key space is exactly
    ``2**(mantissa_bits + exponent_bits)``. Encoding truncates towards zero;
    decoding returns the lower edge of the cell.

The vectorized numpy functions here back the Python-facing ``KeyCodec`` API and
the Bellman-Ford oracle. The ``*_jit`` scalar functions are the ones inlined in
the Dijkstra kernels; the test-suite cross-checks the two paths.
"""
from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np
from numba import njit

from .errors import KeyDomainError, KeyOverflowError

MODE_INT = 0
MODE_F32 = 1
MODE_QUANT = 2

DEFAULT_KEY_SPACE = 2**32
F32_KEY_SPACE = 2**32
# Bit patterns 0 .. 0x7F7FFFFF are the non-negative finite binary32 values.
F32_ADMISSIBLE = 0x7F800000

_MODE_NAMES = {"int": MODE_INT, "f32": MODE_F32, "quant": MODE_QUANT}


def _as_values(x) -> np.ndarray:
    arr = np.asarray(x, dtype=np.float64)
    if np.isnan(arr).any():
        raise KeyDomainError("NaN has no key")
    if np.isinf(arr).any():
        raise KeyDomainError("infinite value has no key")
    if (arr < 0).any():
        raise KeyDomainError("negative value has no key")
    return arr


@dataclass(frozen=True)
class KeyCodec:
    """Maps values to bucket keys. Immutable; all methods are pure."""

    mode: str = "int"
    mantissa_bits: int = 0
    exponent_bits: int = 0
    int_key_space: int = DEFAULT_KEY_SPACE

    def __post_init__(self):
        if self.mode not in _MODE_NAMES:
            raise ValueError(f"unknown key mode {self.mode!r}")
        if self.mode == "quant":
            mb, eb = self.mantissa_bits, self.exponent_bits
            if not 1 <= eb <= 8:
                raise ValueError("exponent_bits must be in 1..8")
            if not 0 <= mb <= 23:
                raise ValueError("mantissa_bits must be in 0..23")
            if mb + eb > 32:
                raise ValueError("mantissa_bits + exponent_bits must be <= 32")
        if self.mode == "int" and not 1 <= self.int_key_space <= 2**32:
            raise ValueError("integer key space must be in 1..2**32")

    @classmethod
    def parse(cls, text: str) -> "KeyCodec":
        """Parse ``int``, ``f32`` or ``quant:<mant>:<exp>``."""
        parts = text.split(":")
        if parts == ["int"]:
            return cls("int")
        if parts == ["f32"]:
            return cls("f32")
        if parts[0] == "quant" and len(parts) == 3:
            try:
                mb, eb = int(parts[1]), int(parts[2])
            except ValueError:
                raise ValueError(f"bad quantized codec {text!r}") from None
            return cls("quant", mantissa_bits=mb, exponent_bits=eb)
        raise ValueError(f"bad key codec {text!r}")

    def __str__(self):
        if self.mode == "quant":
            return f"quant:{self.mantissa_bits}:{self.exponent_bits}"
        return self.mode

    @property
    def mode_id(self) -> int:
        return _MODE_NAMES[self.mode]

    @property
    def is_float(self) -> bool:
        return self.mode != "int"

    @property
    def key_space(self) -> int:
        """Number of bucket cells a queue over this codec needs."""
        if self.mode == "int":
            return self.int_key_space
        if self.mode == "f32":
            return F32_KEY_SPACE
        return 2 ** (self.mantissa_bits + self.exponent_bits)

    @property
    def admissible_count(self) -> int:
        """Number of distinct values that have a key."""
        if self.mode == "f32":
            return F32_ADMISSIBLE
        return self.key_space

    @property
    def max_key(self) -> int:
        return self.admissible_count - 1

    # vectorized encode / decode ------------------------------------------

    def ordinals(self, values) -> np.ndarray:
        """Keys of an array of values, as int64."""
        x = _as_values(values)
        if self.mode == "int":
            if (x != np.floor(x)).any():
                raise KeyDomainError("integer codec needs integral values")
            if (x > self.max_key).any():
                raise KeyOverflowError("value exceeds the integer key space")
            return np.asarray(values).astype(np.int64)
        if self.mode == "f32":
            with np.errstate(over="ignore"):
                x32 = x.astype(np.float32)
            if np.isinf(x32).any():
                raise KeyOverflowError("value exceeds float32 range")
            # adding +0.0 folds -0.0 onto +0.0
            x32 = x32 + np.float32(0.0)
            return np.atleast_1d(x32).view(np.uint32).astype(np.int64).reshape(x32.shape)
        return _quant_ordinals(x, self.mantissa_bits, self.exponent_bits)

    def values(self, keys) -> np.ndarray:
        """Inverse of :meth:`ordinals` (lower cell edge for ``quant``)."""
        k = np.asarray(keys, dtype=np.int64)
        if (k < 0).any() or (k > self.max_key).any():
            raise KeyDomainError("key outside the codec's key space")
        if self.mode == "int":
            return k.copy()
        if self.mode == "f32":
            return np.atleast_1d(k).astype(np.uint32).view(np.float32).reshape(k.shape)
        return _quant_values(k, self.mantissa_bits, self.exponent_bits)

    def add_keys(self, keys, weights) -> np.ndarray:
        """Vectorized relaxation ``key(value(d) + w)``."""
        k = np.asarray(keys, dtype=np.int64)
        if self.mode == "int":
            out = k + np.asarray(weights, dtype=np.int64)
            if (out > self.max_key).any():
                raise KeyOverflowError("distance exceeds the integer key space")
            return out
        if self.mode == "f32":
            with np.errstate(over="ignore"):
                s = self.values(k) + np.asarray(weights, dtype=np.float32)
            if np.isinf(s).any():
                raise KeyOverflowError("distance exceeds float32 range")
            return self.ordinals(s)
        s = self.values(k) + np.asarray(weights, dtype=np.float32).astype(np.float64)
        return self.ordinals(s)

    # scalar API ------------------------------------------------------------

    def ordinal_of(self, x) -> int:
        return int(self.ordinals(np.asarray([x]))[0])

    def value_of(self, k: int):
        v = self.values(np.asarray([k]))[0]
        return int(v) if self.mode == "int" else float(v)

    def add(self, d: int, w) -> int:
        """Key of the distance reached by extending key ``d`` with weight ``w``."""
        return int(self.add_keys(np.asarray([d]), np.asarray([w]))[0])


def _quant_ordinals(x: np.ndarray, mb: int, eb: int) -> np.ndarray:
    bias = 2 ** (eb - 1) - 1
    mant, exp = np.frexp(x)
    biased = exp.astype(np.int64) - 1 + bias
    if (biased[x > 0] > 2**eb - 1).any():
        raise KeyOverflowError("value exceeds the quantized range")
    normal = biased >= 1
    frac = np.floor(np.ldexp(2.0 * mant - 1.0, mb)).astype(np.int64)
    sub = np.floor(np.ldexp(np.where(normal, 0.0, x), bias - 1 + mb)).astype(np.int64)
    keys = np.where(normal, (biased << mb) | frac, sub)
    return np.where(x == 0, 0, keys).astype(np.int64)


def _quant_values(k: np.ndarray, mb: int, eb: int) -> np.ndarray:
    bias = 2 ** (eb - 1) - 1
    biased = k >> mb
    m = k & ((1 << mb) - 1)
    sub = np.ldexp(m.astype(np.float64), 1 - bias - mb)
    norm = np.ldexp((m + (1 << mb)).astype(np.float64), (biased - bias - mb).astype(np.int32))
    return np.where(biased == 0, sub, norm)


# --- scalar kernels used inside the jitted Dijkstra loops --------------------


@njit(cache=True)
def quant_ordinal_jit(x, mb, eb):
    if x == 0.0:
        return np.int64(0)
    bias = (1 << (eb - 1)) - 1
    mant, exp = math.frexp(x)
    biased = exp - 1 + bias
    if biased > (1 << eb) - 1:
        raise KeyOverflowError("distance exceeds the quantized range")
    if biased >= 1:
        frac = np.int64(math.floor(math.ldexp(2.0 * mant - 1.0, mb)))
        return (np.int64(biased) << mb) | frac
    return np.int64(math.floor(math.ldexp(x, bias - 1 + mb)))


@njit(cache=True)
def quant_value_jit(k, mb, eb):
    bias = (1 << (eb - 1)) - 1
    biased = k >> mb
    m = k & ((np.int64(1) << mb) - 1)
    if biased == 0:
        return math.ldexp(float(m), 1 - bias - mb)
    return math.ldexp(float(m + (np.int64(1) << mb)), int(biased - bias - mb))


@njit(cache=True)
def add_key_jit(mode, mb, eb, max_key, d, w, ubuf, fbuf):
    """Relax key ``d`` by weight ``w``.

    ``ubuf`` and ``fbuf`` are one-element uint32/float32 views of the same
    memory, used to reinterpret float32 bit patterns.
    """
    if mode == MODE_INT:
        nd = d + np.int64(w)
        if nd > max_key:
            raise KeyOverflowError("distance exceeds the integer key space")
        return nd
    if mode == MODE_F32:
        ubuf[0] = np.uint32(d)
        s = fbuf[0] + np.float32(w)
        if math.isinf(s):
            raise KeyOverflowError("distance exceeds float32 range")
        fbuf[0] = s
        return np.int64(ubuf[0])
    return quant_ordinal_jit(quant_value_jit(d, mb, eb) + np.float64(np.float32(w)), mb, eb)
