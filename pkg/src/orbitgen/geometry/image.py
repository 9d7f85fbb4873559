"""RGBD image container and the depth <-> network-channel mapping."""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np


@dataclass
class RgbdImage:
    """Color + metric depth with per-pixel validity masks.

    color: (H, W, 3) float32 in [-1, 1]; depth: (H, W) float32 camera-space z;
    texture_mask / depth_mask: (H, W) bool. Masked-false pixels carry no content.
    """

    color: np.ndarray
    depth: np.ndarray
    texture_mask: np.ndarray
    depth_mask: np.ndarray

    def __post_init__(self):
        self.color = np.ascontiguousarray(self.color, dtype=np.float32)
        self.depth = np.ascontiguousarray(self.depth, dtype=np.float32)
        self.texture_mask = np.ascontiguousarray(self.texture_mask, dtype=bool)
        self.depth_mask = np.ascontiguousarray(self.depth_mask, dtype=bool)
        h, w = self.depth.shape
        if self.color.shape != (h, w, 3):
            raise ValueError(f"color shape {self.color.shape} != ({h}, {w}, 3)")
        if self.texture_mask.shape != (h, w) or self.depth_mask.shape != (h, w):
            raise ValueError("mask shapes must match depth")

    @classmethod
    def complete(cls, color: np.ndarray, depth: np.ndarray) -> "RgbdImage":
        """Image with all-true masks (a freshly generated or loaded view)."""
        mask = np.ones(depth.shape, dtype=bool)
        return cls(color, depth, mask, mask.copy())

    @property
    def height(self) -> int:
        return self.depth.shape[0]

    @property
    def width(self) -> int:
        return self.depth.shape[1]

    def is_complete(self) -> bool:
        return bool(self.texture_mask.all() and self.depth_mask.all())

    def validate_contents(self, z_near: float = 0.0):
        """Check mask-covered pixels: finite depth > z_near, color within [-1, 1]."""
        d = self.depth[self.depth_mask]
        if d.size and not (np.isfinite(d).all() and (d > z_near).all()):
            raise ValueError("invalid depth at masked-true pixels")
        c = self.color[self.texture_mask]
        if c.size and (np.abs(c) > 1.0 + 1e-5).any():
            raise ValueError("color outside [-1, 1] at masked-true pixels")

    def copy(self) -> "RgbdImage":
        return RgbdImage(
            self.color.copy(),
            self.depth.copy(),
            self.texture_mask.copy(),
            self.depth_mask.copy(),
        )


def depth_to_channel(depth: np.ndarray, z_near: float, z_far: float) -> np.ndarray:
    """Map metric z to a bounded network channel: disparity 1/z, affine to [-1, 1].

    z = z_near maps to +1 and z = z_far to -1.
    """
    if not (0 < z_near < z_far):
        raise ValueError("need 0 < z_near < z_far")
    d_near, d_far = 1.0 / z_near, 1.0 / z_far
    disp = 1.0 / np.clip(depth, z_near, z_far)
    return ((2.0 * (disp - d_far) / (d_near - d_far)) - 1.0).astype(np.float32)


def channel_to_depth(channel: np.ndarray, z_near: float, z_far: float) -> np.ndarray:
    """Inverse of depth_to_channel; clamps into (z_near, z_far)."""
    if not (0 < z_near < z_far):
        raise ValueError("need 0 < z_near < z_far")
    d_near, d_far = 1.0 / z_near, 1.0 / z_far
    c = np.clip(channel, -1.0 + 1e-6, 1.0 - 1e-6)
    disp = d_far + (c + 1.0) / 2.0 * (d_near - d_far)
    return (1.0 / disp).astype(np.float32)
