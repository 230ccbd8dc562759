__version__ = "0.1.0"

from .exceptions import InvariantViolation, MissingTubeTable, NotEuclidean, VerificationFailure
from .pictures import BasePicture, MutatedPicture, NakayamaPicture, RegularPicture
from .quivercore import Quiver, build_model
from .tame import tube_data
