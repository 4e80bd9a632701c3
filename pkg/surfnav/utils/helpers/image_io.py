"""
Netpbm image helpers (PPM P6 and 16-bit PGM P5).
"""
from pathlib import Path

import numpy as np

from surfnav.exceptions import ImageFormatError


def write_ppm(path: Path, image: np.ndarray) -> None:
    """
    Write an RGB image as binary PPM (P6, maxval 255).

    Args:
        path: Destination file
        image: Array of shape (h, w, 3), dtype uint8
    """
    if image.ndim != 3 or image.shape[2] != 3:
        raise ImageFormatError(f"PPM needs an (h, w, 3) array, got {image.shape}")
    pixels = np.ascontiguousarray(image, dtype=np.uint8)
    height, width = pixels.shape[:2]
    with open(path, "wb") as handle:
        handle.write(f"P6\n{width} {height}\n255\n".encode("ascii"))
        handle.write(pixels.tobytes())


def write_pgm16(path: Path, values: np.ndarray) -> None:
    """
    Write a single-channel image as 16-bit binary PGM (P5, maxval 65535).

    Args:
        path: Destination file
        values: Integer array of shape (h, w) in [0, 65535]
    """
    if values.ndim != 2:
        raise ImageFormatError(f"PGM needs an (h, w) array, got {values.shape}")
    pixels = np.clip(values, 0, 65535).astype(">u2")
    height, width = pixels.shape
    with open(path, "wb") as handle:
        handle.write(f"P5\n{width} {height}\n65535\n".encode("ascii"))
        handle.write(pixels.tobytes())


def read_netpbm(path: Path) -> np.ndarray:
    """
    Read a binary PPM (P6) or PGM (P5) file.

    Args:
        path: Source file

    Returns:
        uint8 (h, w, 3) array for P6, uint8 or uint16 (h, w) array for P5

    Raises:
        ImageFormatError: If the file is missing, truncated or not netpbm
    """
    try:
        data = Path(path).read_bytes()
    except OSError as e:
        raise ImageFormatError(f"Cannot read image {path}: {e}") from e

    tokens = []
    pos = 0
    while len(tokens) < 4:
        # skip whitespace and comments
        while pos < len(data) and data[pos:pos + 1].isspace():
            pos += 1
        if pos < len(data) and data[pos:pos + 1] == b"#":
            while pos < len(data) and data[pos:pos + 1] not in (b"\n", b"\r"):
                pos += 1
            continue
        start = pos
        while pos < len(data) and not data[pos:pos + 1].isspace():
            pos += 1
        if start == pos:
            raise ImageFormatError(f"Truncated netpbm header in {path}")
        tokens.append(data[start:pos])
    pos += 1  # single whitespace before raster

    magic = tokens[0]
    try:
        width, height, maxval = (int(t) for t in tokens[1:4])
    except ValueError as e:
        raise ImageFormatError(f"Malformed netpbm header in {path}") from e
    if magic not in (b"P5", b"P6") or width <= 0 or height <= 0 or not 0 < maxval < 65536:
        raise ImageFormatError(f"Unsupported netpbm file {path} ({magic!r})")

    channels = 3 if magic == b"P6" else 1
    dtype = np.dtype(">u2") if maxval > 255 else np.dtype(np.uint8)
    expected = width * height * channels * dtype.itemsize
    raster = data[pos:pos + expected]
    if len(raster) != expected:
        raise ImageFormatError(f"Truncated raster in {path}: {len(raster)} of {expected} bytes")

    pixels = np.frombuffer(raster, dtype=dtype)
    if dtype.itemsize == 2:
        pixels = pixels.astype(np.uint16)
    if channels == 3:
        return pixels.reshape(height, width, 3).copy()
    return pixels.reshape(height, width).copy()
