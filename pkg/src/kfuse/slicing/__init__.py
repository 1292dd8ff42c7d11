"""Response slicing."""
from .core import Response, ResponseKind, SliceAssignment, SliceGrid
from .slicer import assign_continuous, assign_count, assign_categorical, build_grid, default_grid_sizes, MIN_SLICES
