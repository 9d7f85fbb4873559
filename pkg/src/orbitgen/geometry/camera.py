"""Pinhole camera model and rigid camera poses.

Conventions (used everywhere in this package): the camera looks down +z,
x points right, y points down (so world-up is -y), right-handed. Image
origin is the top-left pixel and pixel centers sit at integer coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
import math

import numpy as np

ROTATION_TOL = 1e-6


@dataclass(frozen=True)
class CameraIntrinsics:
    """Pinhole intrinsics with square pixels."""

    focal_px: float
    cx: float
    cy: float
    width: int
    height: int

    def __post_init__(self):
        if not (self.focal_px > 0 and math.isfinite(self.focal_px)):
            raise ValueError(f"focal_px must be positive, got {self.focal_px}")
        if not (0 <= self.cx < self.width and 0 <= self.cy < self.height):
            raise ValueError("principal point must lie inside the image")
        if self.width < 1 or self.height < 1:
            raise ValueError("resolution must be at least 1x1")

    @property
    def resolution(self):
        return (self.width, self.height)

    @classmethod
    def from_fov(cls, width: int, height: int, vfov_rad: float = math.radians(45.0)):
        """Intrinsics with the given vertical field of view, centered principal point."""
        focal = (height / 2.0) / math.tan(vfov_rad / 2.0)
        return cls(focal, (width - 1) / 2.0, (height - 1) / 2.0, width, height)


@dataclass(frozen=True)
class CameraPose:
    """World-to-camera rigid transform: p_cam = rotation @ p_world + translation."""

    rotation: np.ndarray
    translation: np.ndarray

    def __post_init__(self):
        r = np.asarray(self.rotation, dtype=np.float64).reshape(3, 3)
        t = np.asarray(self.translation, dtype=np.float64).reshape(3)
        object.__setattr__(self, "rotation", r)
        object.__setattr__(self, "translation", t)
        if not np.allclose(r.T @ r, np.eye(3), atol=ROTATION_TOL):
            raise ValueError("rotation is not orthonormal")
        if abs(np.linalg.det(r) - 1.0) > ROTATION_TOL:
            raise ValueError("rotation must have determinant +1")

    @classmethod
    def identity(cls) -> "CameraPose":
        return cls(np.eye(3), np.zeros(3))

    def inverse(self) -> "CameraPose":
        return CameraPose(self.rotation.T, -self.rotation.T @ self.translation)

    def compose(self, inner: "CameraPose") -> "CameraPose":
        """Transform that first applies `inner`, then self."""
        return CameraPose(
            self.rotation @ inner.rotation,
            self.rotation @ inner.translation + self.translation,
        )

    def relative_to(self, base: "CameraPose") -> "CameraPose":
        """This camera expressed in `base`'s camera frame (p_self = rel(p_base))."""
        return self.compose(base.inverse())

    def transform(self, points: np.ndarray) -> np.ndarray:
        """Apply world->camera to an (..., 3) array of points."""
        pts = np.asarray(points, dtype=np.float64)
        return pts @ self.rotation.T + self.translation

    def camera_center(self) -> np.ndarray:
        """Camera position in world coordinates."""
        return -self.rotation.T @ self.translation

    def is_identity(self, tol: float = 1e-12) -> bool:
        return bool(
            np.allclose(self.rotation, np.eye(3), atol=tol)
            and np.allclose(self.translation, 0.0, atol=tol)
        )

    def matrix34(self) -> np.ndarray:
        """3x4 [R|t] matrix, row-major."""
        return np.concatenate([self.rotation, self.translation[:, None]], axis=1)


def orbit_pose(yaw: float, pitch: float, pivot_depth: float) -> CameraPose:
    """Camera on a sphere of radius `pivot_depth` around (0, 0, pivot_depth).

    The camera looks at the pivot with world-up as its up direction;
    (yaw, pitch) = (0, 0) yields the identity pose. Angles in radians.
    """
    if pivot_depth <= 0:
        raise ValueError("pivot_depth must be positive")
    if abs(pitch) >= math.pi / 2:
        raise ValueError(f"|pitch| must be < pi/2, got {pitch}")
    pivot = np.array([0.0, 0.0, pivot_depth])
    # Direction pivot -> camera; (0,0) places the camera at the origin.
    d = np.array(
        [
            math.cos(pitch) * math.sin(yaw),
            -math.sin(pitch),
            -math.cos(pitch) * math.cos(yaw),
        ]
    )
    center = pivot + pivot_depth * d
    z_axis = -d  # forward: camera -> pivot
    down = np.array([0.0, 1.0, 0.0])  # y points down in our convention
    y_axis = down - np.dot(down, z_axis) * z_axis
    y_axis /= np.linalg.norm(y_axis)
    x_axis = np.cross(y_axis, z_axis)
    rotation = np.stack([x_axis, y_axis, z_axis], axis=0)
    return CameraPose(rotation, -rotation @ center)


def sample_pose_gaussian(
    rng: np.random.Generator,
    sigma_yaw: float,
    sigma_pitch: float,
    pivot_depth: float,
) -> CameraPose:
    """Orbit pose with yaw ~ N(0, sigma_yaw^2) and pitch ~ N(0, sigma_pitch^2)."""
    if sigma_yaw < 0 or sigma_pitch < 0:
        raise ValueError("sigmas must be non-negative")
    yaw = rng.normal(0.0, sigma_yaw) if sigma_yaw > 0 else 0.0
    pitch = rng.normal(0.0, sigma_pitch) if sigma_pitch > 0 else 0.0
    limit = math.pi / 2 - 1e-3
    pitch = float(np.clip(pitch, -limit, limit))
    return orbit_pose(yaw, pitch, pivot_depth)
