"""Two-colorings of the positive integers.

Integers are 1-indexed: position 1 takes the first bit of a block.  Three
concrete kinds exist:

* :class:`PeriodicColoring`, a block repeated forever (Thue-Morse blocks
  and their stretched variants);
* :class:`BeattyColoring`, the parity of floor(m * alpha) with
  m = (n - 1) // index_scale + 1;
* :class:`ExplicitColoring`, a finite bit string defined on [1..len].

Every kind offers ``color_of(n)`` and ``materialize(n)``; the latter
returns a ``numpy.uint8`` array ``a`` with ``a[i]`` the color of ``i + 1``.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from pathlib import Path

import numpy as np

from diffseq import exactreal
from diffseq.exactreal import AlphaValue, ExactRational, SeriesInterval

MEMORY_CAP_BITS = 2**30

FILE_HEADER = "# diffseq-coloring v1"


class MemoryCapError(MemoryError):
    kind = "resource cap"


class ColoringFormatError(ValueError):
    pass


def _check_cap(bits: int, cap: int | None) -> None:
    cap = MEMORY_CAP_BITS if cap is None else cap
    if bits > cap:
        raise MemoryCapError(f"block of {bits} bits exceeds memory cap of {cap} bits")


def thue_morse_bits(t: int, *, cap: int | None = None) -> np.ndarray:
    """Block of P_t as a uint8 array of length 2**t."""
    if t < 0:
        raise ValueError("t must be nonnegative")
    _check_cap(2**t, cap)
    block = np.ones(1, dtype=np.uint8)
    for _ in range(t):
        block = np.concatenate([block, 1 - block])
    return block


def stretched_bits(t: int, u: int, *, cap: int | None = None) -> np.ndarray:
    if u < 0:
        raise ValueError("u must be nonnegative")
    _check_cap(2 ** (t + u), cap)
    return np.repeat(thue_morse_bits(t, cap=cap), 2**u)


def bits_to_str(bits) -> str:
    return np.asarray(bits, dtype=np.uint8).tobytes().translate(_TO_ASCII).decode("ascii")


def str_to_bits(text: str) -> np.ndarray:
    text = text.strip()
    if text.strip("01"):
        raise ColoringFormatError("bit strings may only contain 0 and 1")
    return np.frombuffer(text.encode("ascii"), dtype=np.uint8) - ord("0")


_TO_ASCII = bytes.maketrans(b"\x00\x01", b"01")


def thue_morse_block(t: int, *, cap: int | None = None) -> str:
    """Repeating block of P_t: P_{t-1}'s block followed by its complement."""
    return bits_to_str(thue_morse_bits(t, cap=cap))


def stretch_block(t: int, u: int, *, cap: int | None = None) -> str:
    """Block of P_{t,u}: every bit of P_t's block repeated 2**u times."""
    return bits_to_str(stretched_bits(t, u, cap=cap))


@dataclass(frozen=True, eq=False)
class PeriodicColoring:
    block: np.ndarray
    name: str = ""
    r: int = 2

    def __post_init__(self) -> None:
        block = np.ascontiguousarray(self.block, dtype=np.uint8)
        if block.size == 0:
            raise ValueError("periodic block must be nonempty")
        block.setflags(write=False)
        object.__setattr__(self, "block", block)

    @classmethod
    def from_string(cls, bits: str, name: str = "") -> PeriodicColoring:
        return cls(str_to_bits(bits), name)

    @classmethod
    def thue_morse(cls, t: int, u: int = 0, *, cap: int | None = None) -> PeriodicColoring:
        name = f"P_{t}" if u == 0 else f"P_{t},{u}"
        return cls(stretched_bits(t, u, cap=cap), name)

    @property
    def period(self) -> int:
        return int(self.block.size)

    def color_of(self, n: int) -> int:
        if n < 1:
            raise ValueError("colorings are defined on positive integers")
        return int(self.block[(n - 1) % self.period])

    def materialize(self, n: int) -> np.ndarray:
        reps = -(-n // self.period)
        return np.tile(self.block, reps)[:n]

    @property
    def limit(self) -> None:
        return None

    def describe(self) -> dict:
        return {"type": "periodic", "block": bits_to_str(self.block)}

    def __eq__(self, other) -> bool:
        return isinstance(other, PeriodicColoring) and np.array_equal(self.block, other.block)

    def __hash__(self) -> int:
        return hash(self.block.tobytes())


@dataclass(frozen=True, eq=False)
class ExplicitColoring:
    bits: np.ndarray
    r: int = 2

    def __post_init__(self) -> None:
        bits = np.ascontiguousarray(self.bits, dtype=np.uint8)
        bits.setflags(write=False)
        object.__setattr__(self, "bits", bits)

    @classmethod
    def from_string(cls, bits: str) -> ExplicitColoring:
        return cls(str_to_bits(bits))

    @property
    def limit(self) -> int:
        return int(self.bits.size)

    def color_of(self, n: int) -> int:
        if not 1 <= n <= self.limit:
            raise ValueError(f"explicit coloring is only defined on [1..{self.limit}]")
        return int(self.bits[n - 1])

    def materialize(self, n: int) -> np.ndarray:
        if n > self.limit:
            raise ValueError(f"explicit coloring is only defined on [1..{self.limit}]")
        return self.bits[:n]

    def describe(self) -> dict:
        return {"type": "explicit", "bits": bits_to_str(self.bits)}

    def __eq__(self, other) -> bool:
        return isinstance(other, ExplicitColoring) and np.array_equal(self.bits, other.bits)

    def __hash__(self) -> int:
        return hash(self.bits.tobytes())


@dataclass(frozen=True)
class BeattyColoring:
    """Color n by the parity of floor(m * alpha), m = (n - 1) // index_scale + 1."""

    alpha: AlphaValue
    index_scale: int = 1
    r: int = field(default=2, init=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "alpha", exactreal.as_alpha(self.alpha))
        if self.index_scale < 1:
            raise ValueError("index_scale must be positive")

    @property
    def limit(self) -> None:
        return None

    def color_of(self, n: int, refine_cap: int = exactreal.DEFAULT_REFINE_CAP) -> int:
        if n < 1:
            raise ValueError("colorings are defined on positive integers")
        m = (n - 1) // self.index_scale + 1
        return exactreal.floor_parity(self.alpha, m, refine_cap)

    def materialize(self, n: int) -> np.ndarray:
        count = -(-n // self.index_scale)
        par = np.frombuffer(exactreal.floor_parities(self.alpha, count), dtype=np.uint8)
        return np.repeat(par, self.index_scale)[:n]

    def describe(self) -> dict:
        d = {"type": "beatty", "indexScale": self.index_scale}
        if isinstance(self.alpha, ExactRational):
            d["alpha"] = exactreal.format_rational(self.alpha.value)
        else:
            d["alpha"] = "factorial"
            d["interval"] = str(self.alpha.bounds())
        return d


Coloring = PeriodicColoring | ExplicitColoring | BeattyColoring


def coloring_from_description(desc: dict) -> Coloring:
    """Inverse of ``describe()`` (used to re-check stored certificates)."""
    kind = desc.get("type")
    if "file" in desc:
        return read_coloring_file(desc["file"])
    if kind == "periodic":
        return PeriodicColoring.from_string(desc["block"])
    if kind == "explicit":
        return ExplicitColoring.from_string(desc["bits"])
    if kind == "beatty":
        alpha = desc["alpha"]
        value: AlphaValue
        if alpha == "factorial":
            value = SeriesInterval(8)
        else:
            value = ExactRational(exactreal.parse_rational(alpha))
        return BeattyColoring(value, int(desc.get("indexScale", 1)))
    raise ColoringFormatError(f"unknown coloring type {kind!r}")


def write_coloring_file(path: str | Path, coloring: Coloring, n: int | None = None) -> None:
    """Write the v1 coloring file.

    Periodic colorings are stored as their block; anything else is
    materialized on [1..n] and stored explicitly.
    """
    if isinstance(coloring, PeriodicColoring):
        body = f"periodic {bits_to_str(coloring.block)}"
    else:
        if n is None:
            n = coloring.limit
        if n is None:
            raise ValueError("n is required to write a non-periodic coloring")
        body = f"explicit {bits_to_str(coloring.materialize(n))}"
    Path(path).write_text(f"{FILE_HEADER}\n{body}\n", encoding="ascii")


def read_coloring_file(path: str | Path) -> PeriodicColoring | ExplicitColoring:
    lines = Path(path).read_text(encoding="ascii").splitlines()
    if len(lines) < 2 or lines[0].strip() != FILE_HEADER:
        raise ColoringFormatError(f"{path}: missing '{FILE_HEADER}' header")
    kind, _, bits = lines[1].strip().partition(" ")
    if kind == "periodic":
        return PeriodicColoring.from_string(bits)
    if kind == "explicit":
        return ExplicitColoring.from_string(bits)
    raise ColoringFormatError(f"{path}: unknown coloring kind {kind!r}")
