from fractions import Fraction
from pathlib import Path
from typing import Tuple, TypeVar

FilePathType = TypeVar("FilePathType", str, Path)
FolderPathType = TypeVar("FolderPathType", str, Path)

# Exact vectors and matrices are plain tuples of Fractions so they hash and compare bit-exactly.
RatVec = Tuple[Fraction, ...]
RatMatrix = Tuple[RatVec, ...]
