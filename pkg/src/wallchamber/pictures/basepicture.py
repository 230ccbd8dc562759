from abc import ABC, abstractmethod
from pathlib import Path
from typing import List, Optional, Tuple

from ..exactgeom.arrangement import WallChamberStructure, verify_wall_chamber
from ..exactgeom.cone import Cone, LabeledCone
from ..tools.document import SCHEMA_VERSION, PictureDocument, chamber_entry, wall_entry
from ..tools.svg import render_svg
from ..utils import DeepDict, FilePathType, get_schema_from_method_signature
from ..utils.report import make_report, merge_reports, record_violation

ChamberCone = Tuple[Cone, Optional[str], List[Tuple[str, tuple]]]


class BasePicture(ABC):
    """Abstract class defining the structure of all pictures."""

    kind: str = ""

    @classmethod
    def get_source_schema(cls) -> dict:
        """Infer the JSON schema for the source data from the constructor signature (annotation typing)."""
        return get_schema_from_method_signature(cls.__init__)

    def __init__(self, verbose: bool = False, **source_data):
        self.verbose = verbose
        self.source_data = source_data
        self._structure: Optional[WallChamberStructure] = None

    def get_metadata(self) -> DeepDict:
        """Child pictures extend this with their quiver or rank and null data."""
        from .. import __version__

        metadata = DeepDict()
        metadata["schema_version"] = SCHEMA_VERSION
        metadata["kind"] = self.kind
        metadata["ambient_dim"] = self.get_space().ambient_dim
        metadata["tool_version"] = __version__
        metadata["space_equations"] = list(self.get_space().equations)
        return metadata

    @abstractmethod
    def get_space(self) -> Cone:
        raise NotImplementedError()

    @abstractmethod
    def get_walls(self) -> List[LabeledCone]:
        raise NotImplementedError()

    def get_chamber_cones(self) -> List[ChamberCone]:
        """Known chamber cones with their object labels and corner markers; none by default."""
        return []

    def check_closure(self) -> bool:
        return False

    def build(self, display_progress: bool = False) -> WallChamberStructure:
        if self._structure is None:
            self._structure = verify_wall_chamber(
                self.get_walls(),
                space=self.get_space(),
                check_closure=self.check_closure(),
                display_progress=display_progress,
            )
            if self.verbose:
                status = "verified" if self._structure.verified else "FAILED verification"
                print(f"{type(self).__name__}: {len(self._structure.chambers)} chambers, structure {status}!")
        return self._structure

    def match_chambers(self, structure: WallChamberStructure) -> Tuple[List[dict], DeepDict]:
        """Pair each chamber of the structure with the known chamber cone equal to it."""
        chamber_cones = self.get_chamber_cones()
        known = {cone: (name, corners) for cone, name, corners in chamber_cones}
        report = make_report(known_count=len(known))
        chambers = []
        for chamber in structure.chambers:
            name, corners = known.pop(chamber, (None, []))
            if name is None and chamber_cones:
                record_violation(report, "unmatched_chamber", rays=[list(ray) for ray in chamber.rays])
            chambers.append(chamber_entry(chamber, cluster=name, corners=corners))
        for name, _ in known.values():
            record_violation(report, "unmatched_object", name=name)
        return chambers, report

    def to_document(self, display_progress: bool = False) -> PictureDocument:
        structure = self.build(display_progress=display_progress)
        chambers, matching = self.match_chambers(structure)
        verification = merge_reports([("structure", structure.report), ("chambers", matching)])
        return PictureDocument(
            meta=self.get_metadata().to_dict(),
            walls=[wall_entry(wall) for wall in structure.walls],
            chambers=chambers,
            verification=verification,
        )

    def run_picture(
        self,
        document_path: Optional[FilePathType] = None,
        svg_path: Optional[FilePathType] = None,
        overwrite: bool = False,
        seed: int = 0,
        display_progress: bool = False,
    ) -> PictureDocument:
        """
        Build the picture and write its document and, optionally, its SVG drawing.

        Parameters
        ----------
        document_path : FilePathType, optional
            Where to write the JSON document.
        svg_path : FilePathType, optional
            Where to write the drawing; only pictures on a circle or a 2-sphere can be drawn.
        overwrite : bool, default: False
            Whether existing files may be replaced.
        seed : int, default: 0
            Selects the stereographic pole among the fixed candidates.
        """
        document = self.to_document(display_progress=display_progress)
        if document_path is not None:
            document.write(document_path, overwrite=overwrite, verbose=self.verbose)
        if svg_path is not None:
            svg_path = Path(svg_path)
            assert overwrite or not svg_path.exists(), f"{svg_path} already exists and overwrite is False!"
            svg_path.write_text(render_svg(document, seed=seed))
            if self.verbose:
                print(f"Wrote picture drawing to {svg_path}")
        return document
