"""Lossless binary Netpbm I/O: P5 (grayscale) and P4 (bitmap).

Lossless storage is mandatory here; one flipped bit destroys an embedded
plane. Readers accept header comments, writers never emit them. Writes go
through a temp file + rename so a failed run leaves no partial output.

P4 bit value 1 renders black per the format; the rest of the toolkit treats
bits abstractly, so polarity only matters when viewing files.
"""

from __future__ import annotations

import os
import tempfile

import numpy as np

from .bitplane import as_binary, as_gray

_WS = b" \t\n\r\x0b\x0c"


class NetpbmError(ValueError):
    """Malformed or unsupported Netpbm content."""


def atomic_write_bytes(path, data: bytes) -> None:
    """Write ``data`` to ``path`` atomically (temp file in same dir + rename)."""
    path = os.fspath(path)
    directory = os.path.dirname(path) or "."
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".tmp.", suffix=".part")
    try:
        with os.fdopen(fd, "wb") as fh:
            fh.write(data)
        os.replace(tmp, path)
    except BaseException:
        try:
            os.unlink(tmp)
        except OSError:
            pass
        raise


def _header(data: bytes, n_tokens: int, path) -> tuple[list[bytes], int]:
    # returns header tokens and the offset of the raster (one whitespace
    # byte after the last token, comments allowed between tokens)
    toks: list[bytes] = []
    i = 0
    while len(toks) < n_tokens:
        if i >= len(data):
            raise NetpbmError(f"{path}: truncated header")
        ch = data[i]
        if ch in _WS:
            i += 1
            continue
        if ch == 0x23:  # '#' comment runs to end of line
            while i < len(data) and data[i] not in b"\r\n":
                i += 1
            continue
        j = i
        while j < len(data) and data[j] not in _WS and data[j] != 0x23:
            j += 1
        toks.append(data[i:j])
        i = j
    if i >= len(data) or data[i] not in _WS:
        raise NetpbmError(f"{path}: missing whitespace before raster")
    return toks, i + 1


def _int_token(tok: bytes, what: str, path) -> int:
    try:
        return int(tok)
    except ValueError:
        raise NetpbmError(f"{path}: {what} is not an integer: {tok!r}") from None


def _square(w: int, h: int, path) -> int:
    if w < 1 or h < 1:
        raise NetpbmError(f"{path}: image dimensions must be positive, got {w}x{h}")
    if w != h:
        raise NetpbmError(f"{path}: image must be square, got {w}x{h}")
    return w


def read_gray(path) -> np.ndarray:
    """Read a binary PGM (P5, maxval 255) square image as uint8."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:2] != b"P5":
        raise NetpbmError(f"{path}: bad magic number {data[:2]!r}, expected P5")
    toks, offset = _header(data[2:], 3, path)
    offset += 2
    w = _int_token(toks[0], "width", path)
    h = _int_token(toks[1], "height", path)
    maxval = _int_token(toks[2], "maxval", path)
    n = _square(w, h, path)
    if maxval != 255:
        raise NetpbmError(f"{path}: maxval must be 255 (8-bit), got {maxval}")
    raster = data[offset : offset + n * n]
    if len(raster) < n * n:
        raise NetpbmError(
            f"{path}: truncated raster, expected {n * n} bytes, got {len(raster)}"
        )
    return np.frombuffer(raster, dtype=np.uint8).reshape(n, n).copy()


def write_gray(path, img: np.ndarray) -> None:
    """Write a square uint8 image as binary PGM (P5)."""
    img = as_gray(img)
    n = img.shape[0]
    atomic_write_bytes(path, f"P5\n{n} {n}\n255\n".encode("ascii") + img.tobytes())


def read_binary(path) -> np.ndarray:
    """Read a binary PBM (P4) square image as a 0/1 uint8 array."""
    with open(path, "rb") as fh:
        data = fh.read()
    if data[:2] != b"P4":
        raise NetpbmError(f"{path}: bad magic number {data[:2]!r}, expected P4")
    toks, offset = _header(data[2:], 2, path)
    offset += 2
    w = _int_token(toks[0], "width", path)
    h = _int_token(toks[1], "height", path)
    n = _square(w, h, path)
    row_bytes = (n + 7) // 8
    raster = data[offset : offset + n * row_bytes]
    if len(raster) < n * row_bytes:
        raise NetpbmError(
            f"{path}: truncated raster, expected {n * row_bytes} bytes, got {len(raster)}"
        )
    rows = np.frombuffer(raster, dtype=np.uint8).reshape(n, row_bytes)
    # rows are padded to byte boundaries, bits packed MSB-first
    return np.unpackbits(rows, axis=1)[:, :n].copy()


def write_binary(path, img: np.ndarray) -> None:
    """Write a square 0/1 image as binary PBM (P4), rows padded per the format."""
    img = as_binary(img)
    n = img.shape[0]
    packed = np.packbits(img, axis=1)
    atomic_write_bytes(path, f"P4\n{n} {n}\n".encode("ascii") + packed.tobytes())


def read_auto(path) -> tuple[str, np.ndarray]:
    """Read either supported format; returns ("gray", img) or ("binary", img)."""
    with open(path, "rb") as fh:
        magic = fh.read(2)
    if magic == b"P5":
        return "gray", read_gray(path)
    if magic == b"P4":
        return "binary", read_binary(path)
    raise NetpbmError(f"{path}: bad magic number {magic!r}, expected P4 or P5")
