"""Bit-plane decomposition of grayscale images and message embedding.

Plane indices are 0-based from the least significant bit, so plane p carries
weight 2**p. Embedding replaces whole planes with scrambled message bits and
leaves every other plane untouched, which is what makes extraction exact.
"""

from __future__ import annotations

import numpy as np

from .arnold import _as_int, grid_side
from .schedule import ScrambleSchedule, schedule_scramble, schedule_unscramble


def as_gray(img: np.ndarray) -> np.ndarray:
    """Validate an 8-bit square grayscale image, returning it as uint8."""
    a = np.asarray(img)
    grid_side(a)
    if a.dtype != np.uint8:
        if not np.issubdtype(a.dtype, np.integer):
            raise ValueError(f"grayscale image must be integer-valued, got {a.dtype}")
        if a.min() < 0 or a.max() > 255:
            raise ValueError("grayscale image values must be in [0, 255]")
        a = a.astype(np.uint8)
    return a


def as_binary(img: np.ndarray) -> np.ndarray:
    """Validate a square 1-bit image (values 0/1), returning it as uint8."""
    a = np.asarray(img)
    grid_side(a)
    if not np.issubdtype(a.dtype, np.integer):
        raise ValueError(f"binary image must be integer-valued, got {a.dtype}")
    if not np.isin(a, (0, 1)).all():
        raise ValueError("binary image values must be 0 or 1")
    return a.astype(np.uint8)


def _check_plane(p: int) -> int:
    p = _as_int(p, "plane index")
    if not 0 <= p <= 7:
        raise ValueError(f"plane index must be in [0, 7], got {p}")
    return p


def get_plane(img: np.ndarray, p: int) -> np.ndarray:
    """Bit p of every pixel, as a binary image."""
    img = as_gray(img)
    p = _check_plane(p)
    return (img >> p) & np.uint8(1)


def set_plane(img: np.ndarray, p: int, bits: np.ndarray) -> np.ndarray:
    """Replace bit p of every pixel with ``bits``; all other bits untouched."""
    img = as_gray(img)
    p = _check_plane(p)
    bits = as_binary(bits)
    if bits.shape != img.shape:
        raise ValueError(f"plane side {bits.shape[0]} does not match image side {img.shape[0]}")
    keep = img & np.uint8(0xFF ^ (1 << p))
    return keep | (bits << np.uint8(p))


def embed(
    cover: np.ndarray,
    messages: list[np.ndarray],
    sched: ScrambleSchedule,
    planes: list[int],
) -> np.ndarray:
    """Scramble each message with ``sched`` and write it into its bit plane.

    Message k goes to planes[k]; planes must be distinct and every message
    must match the cover side. Planes not listed stay bit-identical.
    """
    cover = as_gray(cover)
    planes = [_check_plane(p) for p in planes]
    if len(messages) != len(planes):
        raise ValueError(
            f"{len(messages)} messages but {len(planes)} planes; counts must match"
        )
    if len(set(planes)) != len(planes):
        raise ValueError(f"duplicate plane index in {planes}")
    stego = cover.copy()
    for msg, p in zip(messages, planes):
        msg = as_binary(msg)
        if msg.shape != cover.shape:
            raise ValueError(
                f"message side {msg.shape[0]} does not match cover side {cover.shape[0]}"
            )
        stego = set_plane(stego, p, schedule_scramble(msg, sched))
    return stego


def extract(
    stego: np.ndarray, sched: ScrambleSchedule, planes: list[int]
) -> list[np.ndarray]:
    """Read each listed plane and unscramble it back into a message."""
    stego = as_gray(stego)
    planes = [_check_plane(p) for p in planes]
    return [schedule_unscramble(get_plane(stego, p), sched) for p in planes]


# -- byte payload packing ------------------------------------------------------


def capacity_bytes(side: int) -> int:
    """Largest payload (in bytes) that fits one side x side plane."""
    side = _as_int(side, "side")
    return max(0, (side * side - 32) // 8)


def pack_payload(data: bytes, side: int) -> np.ndarray:
    """Lay bytes out as a binary image: 32-bit big-endian length header, then
    payload bytes MSB-first, zero padding, all row-major."""
    side = _as_int(side, "side")
    if side < 1:
        raise ValueError(f"side must be >= 1, got {side}")
    data = bytes(data)
    if 32 + 8 * len(data) > side * side:
        raise ValueError(
            f"payload of {len(data)} bytes exceeds capacity: "
            f"a {side}x{side} plane holds at most {capacity_bytes(side)} bytes"
        )
    framed = len(data).to_bytes(4, "big") + data
    bits = np.unpackbits(np.frombuffer(framed, dtype=np.uint8))
    out = np.zeros(side * side, dtype=np.uint8)
    out[: bits.size] = bits
    return out.reshape(side, side)


def unpack_payload(bits: np.ndarray) -> bytes:
    """Recover the bytes packed by pack_payload."""
    flat = as_binary(bits).ravel()
    if flat.size < 32:
        raise ValueError("plane too small to hold a payload header")
    length = int.from_bytes(np.packbits(flat[:32]).tobytes(), "big")
    if 32 + 8 * length > flat.size:
        raise ValueError(
            f"corrupt payload header: {length} bytes claimed, "
            f"plane holds at most {(flat.size - 32) // 8}"
        )
    return np.packbits(flat[32 : 32 + 8 * length]).tobytes()
