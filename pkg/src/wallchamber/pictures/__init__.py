from .basepicture import BasePicture
from .mutatedpicture import MutatedPicture, parse_sequence
from .nakayamapicture import NakayamaPicture
from .regularpicture import RegularPicture
