from typing import List, Optional

from .basepicture import BasePicture, ChamberCone
from ..exactgeom.cone import Cone, LabeledCone
from ..quivercore.model import build_model
from ..quivercore.quiver import Quiver
from ..srr.clusters import enumerate_clusters
from ..srr.cones import cone_of, corner_labels
from ..tame.domains import regular_space, regular_walls
from ..tame.tubes import tube_data
from ..utils import DeepDict, FilePathType


class RegularPicture(BasePicture):
    """The regular semi-invariant picture of a Euclidean quiver, with chambers labelled by clusters."""

    kind = "regular"

    def __init__(self, quiver: str, tube_table_file_path: Optional[FilePathType] = None, verbose: bool = False):
        """
        Parameters
        ----------
        quiver : str
            Quiver text of the form 'n; i>j, ...'.
        tube_table_file_path : FilePathType, optional
            Exceptional tubes of a quiver that is not of type A~; derived automatically otherwise.
        verbose : bool, default: False
        """
        super().__init__(verbose=verbose, quiver=quiver, tube_table_file_path=tube_table_file_path)
        self.quiver = Quiver.from_text(quiver)
        self.model = build_model(self.quiver)
        self.tube_data = tube_data(self.model, tube_table_file_path)

    def get_metadata(self) -> DeepDict:
        metadata = super().get_metadata()
        metadata["quiver"] = self.quiver.to_text()
        metadata["eta"] = self.model.eta
        metadata["g_eta"] = self.model.g_eta
        return metadata

    def get_space(self) -> Cone:
        return regular_space(self.tube_data)

    def get_walls(self) -> List[LabeledCone]:
        return regular_walls(self.model, self.tube_data)

    def get_chamber_cones(self) -> List[ChamberCone]:
        return [
            (
                cone_of(self.model, self.tube_data, cluster),
                cluster.label(),
                corner_labels(self.model, self.tube_data, cluster),
            )
            for cluster in enumerate_clusters(self.model, self.tube_data)
        ]
