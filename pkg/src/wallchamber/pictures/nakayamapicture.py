from typing import List

from .basepicture import BasePicture, ChamberCone
from ..exactgeom.cone import Cone, LabeledCone
from ..nakayama.domains import domain
from ..nakayama.modules import bricks, check_rank, dim_vector, g_vector
from ..nakayama.tilting import enumerate_stt, g_cone
from ..utils import DeepDict

MAX_RANK = 6


class NakayamaPicture(BasePicture):
    """The semi-invariant picture of the self-injective Nakayama algebra Lambda_r."""

    kind = "nakayama"

    def __init__(self, rank: int, verbose: bool = False):
        """
        Parameters
        ----------
        rank : int
            The number of vertices r of the cyclic quiver, between 1 and 6.
        verbose : bool, default: False
        """
        check_rank(rank)
        if rank > MAX_RANK:
            raise ValueError(f"Nakayama pictures are built for ranks up to {MAX_RANK}; got {rank}!")
        super().__init__(verbose=verbose, rank=rank)
        self.rank = rank

    def get_metadata(self) -> DeepDict:
        metadata = super().get_metadata()
        metadata["rank"] = self.rank
        return metadata

    def get_space(self) -> Cone:
        return Cone.linear_subspace(self.rank, ())

    def get_walls(self) -> List[LabeledCone]:
        return [
            LabeledCone(cone=domain(self.rank, brick), label=dim_vector(self.rank, brick), module_id=brick.label())
            for brick in bricks(self.rank)
        ]

    def get_chamber_cones(self) -> List[ChamberCone]:
        chambers = []
        for stt in enumerate_stt(self.rank):
            corners = [
                (f"{module.label()}[1]" if shifted else module.label(), g_vector(self.rank, module, shifted))
                for module, shifted in stt.summands
            ]
            chambers.append((g_cone(self.rank, stt), stt.label(), corners))
        return chambers

    def check_closure(self) -> bool:
        return self.rank <= 4
