"""PGM/PPM (netpbm) readers and writers bridging pixels and matrices.

Grayscale images are (H, W) float64 arrays with values in [0, 255]; color
images are (H, W, 3) arrays holding the red, green and blue planes. Readers
accept both ASCII (P2/P3) and binary (P5/P6) variants, arbitrary whitespace
runs, and ``#`` comments. Writers emit one canonical form with maxval 255,
rounding half-away-from-zero and clamping to [0, 255] at encode time only;
in-memory matrices keep their real values so error metrics are measured
before quantization.
"""

from __future__ import annotations

import re

import numpy as np

from .errors import (
    BadHeaderError,
    BadMagicError,
    NetpbmError,
    ShapeMismatchError,
    TruncatedDataError,
    UnsupportedMaxvalError,
)
from .validation import check_matrix

_WHITESPACE = b" \t\r\n\v\f"


def _tokens(data: bytes, start: int, count: int):
    """Read *count* whitespace-separated tokens, skipping '#' comments.

    Returns (tokens, position one past the final token).
    """
    toks = []
    i = start
    n = len(data)
    while len(toks) < count:
        while i < n:
            if data[i] in _WHITESPACE:
                i += 1
            elif data[i : i + 1] == b"#":
                while i < n and data[i : i + 1] != b"\n":
                    i += 1
            else:
                break
        if i >= n:
            raise BadHeaderError("header ended before all fields were read")
        j = i
        while j < n and data[j] not in _WHITESPACE and data[j : j + 1] != b"#":
            j += 1
        toks.append(data[i:j])
        i = j
    return toks, i


def _parse_header(data: bytes, magics: dict[bytes, bool]):
    """Common P?/width/height/maxval parsing.

    Returns (binary?, width, height, maxval, offset of first raster byte).
    """
    if not data:
        raise BadMagicError("empty input")
    (magic,), pos = _tokens(data, 0, 1)
    if magic not in magics:
        wanted = b"/".join(sorted(magics)).decode()
        raise BadMagicError(f"expected magic {wanted}, got {magic[:8]!r}")
    fields, pos = _tokens(data, pos, 3)
    try:
        width, height, maxval = (int(f) for f in fields)
    except ValueError:
        raise BadHeaderError(f"non-numeric header fields {fields!r}") from None
    if width < 1 or height < 1:
        raise BadHeaderError(f"dimensions must be positive, got {width}x{height}")
    if maxval > 255:
        raise UnsupportedMaxvalError(f"maxval {maxval} exceeds 8-bit range")
    if maxval < 1:
        raise BadHeaderError(f"maxval must be >= 1, got {maxval}")
    binary = magics[magic]
    if binary:
        # Exactly one whitespace byte separates maxval from the raster.
        if pos >= len(data) or data[pos] not in _WHITESPACE:
            raise BadHeaderError("missing whitespace after maxval")
        pos += 1
    return binary, width, height, maxval, pos


def _read_samples(data: bytes, pos: int, count: int, binary: bool) -> np.ndarray:
    if binary:
        raster = data[pos : pos + count]
        if len(raster) < count:
            raise TruncatedDataError(f"expected {count} raster bytes, got {len(raster)}")
        return np.frombuffer(raster, dtype=np.uint8).astype(np.float64)
    toks = re.sub(rb"#[^\n]*", b"", data[pos:]).split()
    if len(toks) < count:
        raise TruncatedDataError(f"expected {count} samples, got {len(toks)}")
    values = []
    for tok in toks[:count]:
        try:
            v = int(tok)
        except ValueError:
            raise BadHeaderError(f"non-numeric sample token {tok[:16]!r}") from None
        if not 0 <= v <= 255:
            raise NetpbmError(f"sample value {v} outside [0, 255]")
        values.append(v)
    return np.array(values, dtype=np.float64)


def read_pgm(data: bytes) -> np.ndarray:
    """Decode P2 (ASCII) or P5 (binary) grayscale bytes to an (H, W) array."""
    binary, width, height, _, pos = _parse_header(data, {b"P2": False, b"P5": True})
    samples = _read_samples(data, pos, width * height, binary)
    return samples.reshape(height, width)


def read_ppm(data: bytes) -> np.ndarray:
    """Decode P3 (ASCII) or P6 (binary) color bytes to an (H, W, 3) array."""
    binary, width, height, _, pos = _parse_header(data, {b"P3": False, b"P6": True})
    samples = _read_samples(data, pos, width * height * 3, binary)
    return samples.reshape(height, width, 3)


def _quantize(values: np.ndarray) -> np.ndarray:
    """Round half-away-from-zero, then clamp into [0, 255]."""
    rounded = np.sign(values) * np.floor(np.abs(values) + 0.5)
    return np.clip(rounded, 0.0, 255.0).astype(np.uint8)


def write_pgm(pixels, binary: bool = False) -> bytes:
    """Encode a real-valued matrix as PGM with maxval 255.

    Integer-valued inputs in [0, 255] round-trip exactly through
    :func:`read_pgm`.
    """
    a = check_matrix(pixels, name="pixels")
    q = _quantize(a)
    height, width = q.shape
    magic = b"P5" if binary else b"P2"
    header = b"%s %d %d 255\n" % (magic, width, height)
    if binary:
        return header + q.tobytes()
    body = b"\n".join(b" ".join(b"%d" % v for v in row) for row in q)
    return header + body + b"\n"


def write_ppm(image, binary: bool = False) -> bytes:
    """Encode an (H, W, 3) real-valued array as PPM with maxval 255."""
    a = np.array(image, dtype=np.float64, copy=True)
    if a.ndim != 3 or a.shape[2] != 3:
        raise ShapeMismatchError(f"expected an (H, W, 3) array, got {a.shape}")
    if not np.isfinite(a).all():
        raise NetpbmError("image contains non-finite values")
    q = _quantize(a)
    height, width = q.shape[:2]
    magic = b"P6" if binary else b"P3"
    header = b"%s %d %d 255\n" % (magic, width, height)
    if binary:
        return header + q.tobytes()
    rows = []
    for r in range(height):
        rows.append(b" ".join(b"%d" % v for v in q[r].reshape(-1)))
    return header + b"\n".join(rows) + b"\n"


def flatten_images(images) -> np.ndarray:
    """Stack same-shape grayscale images as rows of one sample matrix.

    Row i is image i scanned row-major; output shape is n_images x (H*W).
    """
    mats = [check_matrix(img, name=f"images[{i}]") for i, img in enumerate(images)]
    if not mats:
        raise ShapeMismatchError("need at least one image")
    shape = mats[0].shape
    for i, m in enumerate(mats):
        if m.shape != shape:
            raise ShapeMismatchError(f"images[{i}] has shape {m.shape}, expected {shape}")
    return np.stack([m.reshape(-1) for m in mats])
