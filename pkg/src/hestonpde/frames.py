"""Coordinate frames.

A frame names the coordinates a sampled function lives in.  Grid functions
carry exactly one frame and cross-frame arithmetic is rejected, which keeps
changed-variable data from being mixed up with the original coordinates.
"""

from __future__ import annotations

from dataclasses import dataclass
from enum import Enum


class FrameTag(Enum):
    SPOT_VAR = "spot_var"          # (S, v, t)
    LOG_SPOT_VAR = "log_spot_var"  # (x = ln S, v, t)
    VAR_TIME = "var_time"          # (v, t), spot-independent functions
    FELLER_X = "feller_x"          # (x, tau)
    INV_Y = "inv_y"                # (y = 1/x, tau)
    CEV = "cev"                    # (y, tau) with power-law degeneracy y^(2 alpha)


@dataclass(frozen=True)
class Frame:
    """Coordinate frame, optionally parameterized (CEV carries alpha and a)."""

    tag: FrameTag
    alpha: float | None = None
    a: float | None = None

    def __post_init__(self):
        if self.tag is FrameTag.CEV:
            if self.alpha is None or self.a is None:
                raise ValueError("CEV frame requires alpha and a")
            if self.a <= 0 or self.alpha <= 0:
                raise ValueError(f"CEV frame needs a > 0 and alpha > 0, got a={self.a}, alpha={self.alpha}")
        elif self.alpha is not None or self.a is not None:
            raise ValueError(f"frame {self.tag.value} takes no parameters")

    def __str__(self) -> str:
        if self.tag is FrameTag.CEV:
            return f"cev(alpha={self.alpha}, a={self.a})"
        return self.tag.value


SPOT_VAR = Frame(FrameTag.SPOT_VAR)
LOG_SPOT_VAR = Frame(FrameTag.LOG_SPOT_VAR)
VAR_TIME = Frame(FrameTag.VAR_TIME)
FELLER_X = Frame(FrameTag.FELLER_X)
INV_Y = Frame(FrameTag.INV_Y)


def cev_frame(alpha: float, a: float) -> Frame:
    return Frame(FrameTag.CEV, alpha=alpha, a=a)
