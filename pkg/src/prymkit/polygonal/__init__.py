"""Polygonal constructions: direct images and the bigonal, trigonal and tetragonal constructions."""

from .constructions import (
    LocalPictureTag,
    bigonal,
    branch_counts,
    classify,
    local_picture,
    local_pictures,
    tetragonal,
    trigonal_forward,
    trigonal_inverse,
)
from .direct import DirectImage, direct_image, orientation_cover, orientation_splits
from .local import LocalNode, LocalResult, NotNodal

__all__ = [
    "DirectImage",
    "LocalNode",
    "LocalPictureTag",
    "LocalResult",
    "NotNodal",
    "bigonal",
    "branch_counts",
    "classify",
    "direct_image",
    "local_picture",
    "local_pictures",
    "orientation_cover",
    "orientation_splits",
    "tetragonal",
    "trigonal_forward",
    "trigonal_inverse",
]
