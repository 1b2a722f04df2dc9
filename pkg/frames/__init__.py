"""Strata, thresholds and smooth-point certificates for the variety of orthogonal frames."""
from .strata import FrameSpaceParams, StratumIndex
from .exactfield import FieldContext, FrameMatrix, make_context

__all__ = ["FrameSpaceParams", "StratumIndex", "FieldContext", "FrameMatrix", "make_context"]
