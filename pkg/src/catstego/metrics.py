"""Distortion and agreement metrics between images.

MSE is in squared intensity units; PSNR uses the 8-bit peak of 255.
"""

from __future__ import annotations

import math
from dataclasses import dataclass

import numpy as np

PEAK = 255


def _pair(a: np.ndarray, b: np.ndarray) -> tuple[np.ndarray, np.ndarray]:
    a, b = np.asarray(a), np.asarray(b)
    if a.shape != b.shape:
        raise ValueError(f"image shapes differ: {a.shape} vs {b.shape}")
    if a.ndim != 2 or a.shape[0] != a.shape[1] or a.shape[0] < 1:
        raise ValueError(f"images must be square and non-empty, got shape {a.shape}")
    return a, b


def mse(a: np.ndarray, b: np.ndarray) -> float:
    """Mean squared intensity difference."""
    a, b = _pair(a, b)
    diff = a.astype(np.int64) - b.astype(np.int64)
    return float(np.mean(diff * diff))


def psnr(a: np.ndarray, b: np.ndarray) -> float:
    """Peak signal-to-noise ratio in dB. Identical images have no finite
    PSNR, so that case raises rather than returning a number."""
    m = mse(a, b)
    if m == 0:
        raise ValueError("images are identical: PSNR is infinite")
    return 10.0 * math.log10(PEAK * PEAK / m)


def bit_preservation_ratio(cover: np.ndarray, stego: np.ndarray) -> float:
    """Fraction of all 8 * N * N cover bits left unchanged."""
    cover, stego = _pair(cover, stego)
    changed = np.unpackbits((cover.astype(np.uint8) ^ stego.astype(np.uint8)).ravel())
    return 1.0 - float(changed.mean())


def bit_agreement(a: np.ndarray, b: np.ndarray) -> float:
    """Fraction of equal cells between two binary images."""
    a, b = _pair(a, b)
    return float(np.mean(a == b))


@dataclass(frozen=True)
class MetricsReport:
    """PSNR/MSE/bit-preservation comparison; psnr is None when infinite."""

    mse: float
    psnr: float | None
    bit_preservation: float

    def csv(self) -> str:
        psnr_text = "inf" if self.psnr is None else f"{self.psnr:.6g}"
        return (
            f"mse,{self.mse:.6g}\n"
            f"psnr,{psnr_text}\n"
            f"bit_preservation,{self.bit_preservation:.6g}\n"
        )


def compare(cover: np.ndarray, stego: np.ndarray) -> MetricsReport:
    m = mse(cover, stego)
    return MetricsReport(
        mse=m,
        psnr=None if m == 0 else 10.0 * math.log10(PEAK * PEAK / m),
        bit_preservation=bit_preservation_ratio(cover, stego),
    )
