from typing import List, Optional

from .basepicture import BasePicture
from ..exactgeom.cone import Cone, LabeledCone
from ..mutapp.transport import PictureState, mutate_sequence
from ..quivercore.model import build_model
from ..quivercore.quiver import Quiver
from ..tame.tubes import tube_data
from ..utils import DeepDict, FilePathType


def parse_sequence(sequence: str) -> List[int]:
    """'2,4' or '2 4' -> [2, 4]; the empty string is the empty sequence."""
    tokens = sequence.replace(",", " ").split()
    if not all(token.isdigit() for token in tokens):
        raise ValueError(f"'{sequence}' is not a sequence of vertices!")
    return [int(token) for token in tokens]


class MutatedPicture(BasePicture):
    """The regular picture of a Euclidean quiver transported along a mutation sequence."""

    kind = "mutated"

    def __init__(
        self,
        quiver: str,
        sequence: str = "",
        tube_table_file_path: Optional[FilePathType] = None,
        verbose: bool = False,
    ):
        """
        Parameters
        ----------
        quiver : str
            Quiver text of the starting Euclidean quiver.
        sequence : str, default: ""
            Mutation vertices separated by commas or spaces.
        tube_table_file_path : FilePathType, optional
        verbose : bool, default: False
        """
        super().__init__(verbose=verbose, quiver=quiver, sequence=sequence, tube_table_file_path=tube_table_file_path)
        self.quiver = Quiver.from_text(quiver)
        self.sequence = parse_sequence(sequence)
        model = build_model(self.quiver)
        start = PictureState.from_regular(model, tube_data(model, tube_table_file_path))
        self.state = mutate_sequence(start, self.sequence, verify=False)

    def get_metadata(self) -> DeepDict:
        metadata = super().get_metadata()
        metadata["quiver"] = self.state.quiver.to_text()
        metadata["eta"] = self.state.eta
        metadata["g_eta"] = self.state.g_eta
        metadata["history"] = [list(step) for step in self.state.history]
        return metadata

    def get_space(self) -> Cone:
        return self.state.space()

    def get_walls(self) -> List[LabeledCone]:
        return list(self.state.walls)
