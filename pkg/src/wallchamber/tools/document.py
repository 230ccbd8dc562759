import json
from dataclasses import dataclass, field
from fractions import Fraction
from pathlib import Path
from typing import List, Optional, Sequence, Tuple, Union

from ..exactgeom.cone import Cone, LabeledCone
from ..utils import DeepDict, ExactEncoder, FilePathType, decode_rational, validate_against_schema

SCHEMA_VERSION = "1.0.0"
_VECTOR_LIST_KEYS = ("equations", "inequalities", "rays", "lineality", "space_equations")
_VECTOR_KEYS = ("label", "vector", "eta", "g_eta")


def _normalize(data):
    """JSON-normalize nested data: Fractions become 'p/q' strings, tuples become lists."""
    return json.loads(json.dumps(data, cls=ExactEncoder))


def _decode(data):
    if isinstance(data, dict):
        decoded = {}
        for key, value in data.items():
            if key in _VECTOR_LIST_KEYS and value is not None:
                decoded[key] = [tuple(decode_rational(entry) for entry in vector) for vector in value]
            elif key in _VECTOR_KEYS and value is not None:
                decoded[key] = tuple(decode_rational(entry) for entry in value)
            else:
                decoded[key] = _decode(value)
        return decoded
    if isinstance(data, list):
        return [_decode(item) for item in data]
    return data


def _sort_key(entry: dict) -> str:
    return json.dumps(_normalize(entry), sort_keys=True)


def cone_entry(cone: Cone) -> dict:
    return dict(
        equations=list(cone.equations),
        inequalities=list(cone.inequalities),
        rays=list(cone.rays),
        lineality=list(cone.lineality),
    )


def wall_entry(wall: LabeledCone) -> dict:
    return dict(label=wall.label, module_id=wall.module_id, is_null=wall.is_null, **cone_entry(wall.cone))


def chamber_entry(
    cone: Cone, cluster: Optional[str] = None, corners: Sequence[Tuple[str, Sequence[Fraction]]] = ()
) -> dict:
    return dict(
        cluster=cluster,
        corners=[dict(name=name, vector=tuple(vector)) for name, vector in corners],
        **cone_entry(cone),
    )


def cone_from_entry(entry: dict, ambient_dim: int) -> Cone:
    """Rebuild a cone from its stored rays and lineality."""
    lines = [tuple(line) for line in entry["lineality"]]
    negated = [tuple(-value for value in line) for line in lines]
    return Cone.from_generators(ambient_dim, [tuple(ray) for ray in entry["rays"]] + lines + negated)


@dataclass
class PictureDocument:
    """
    Serializable form of a picture: meta data, walls, chambers and the verification report.

    Walls and chambers are sorted by their canonical encodings so that equal pictures give equal documents.
    """

    meta: dict
    walls: List[dict] = field(default_factory=list)
    chambers: List[dict] = field(default_factory=list)
    verification: dict = field(default_factory=lambda: dict(passed=True))

    def __post_init__(self):
        self.meta = _decode(_normalize(self.meta))
        self.walls = sorted(_decode(_normalize(self.walls)), key=_sort_key)
        self.chambers = sorted(_decode(_normalize(self.chambers)), key=_sort_key)
        self.verification = _normalize(
            self.verification.to_dict() if isinstance(self.verification, DeepDict) else self.verification
        )

    @property
    def ambient_dim(self) -> int:
        return self.meta["ambient_dim"]

    def wall_cones(self) -> List[LabeledCone]:
        return [
            LabeledCone(
                cone=cone_from_entry(wall, self.ambient_dim),
                label=wall["label"],
                module_id=wall["module_id"],
                is_null=wall["is_null"],
            )
            for wall in self.walls
        ]

    def chamber_cones(self) -> List[Cone]:
        return [cone_from_entry(chamber, self.ambient_dim) for chamber in self.chambers]

    def space(self) -> Cone:
        return Cone.linear_subspace(self.ambient_dim, self.meta.get("space_equations", []))

    def to_dict(self) -> dict:
        return _normalize(
            dict(meta=self.meta, walls=self.walls, chambers=self.chambers, verification=self.verification)
        )

    def to_json(self) -> str:
        document = self.to_dict()
        validate_against_schema(document, "picture_document_schema.json")
        return json.dumps(document, indent=2, sort_keys=True)

    def write(self, file_path: FilePathType, overwrite: bool = False, verbose: bool = False) -> Path:
        file_path = Path(file_path)
        assert overwrite or not file_path.exists(), f"{file_path} already exists and overwrite is False!"
        file_path.write_text(self.to_json() + "\n")
        if verbose:
            print(f"Wrote picture document to {file_path}")
        return file_path


def document_from_json(source: Union[str, FilePathType]) -> PictureDocument:
    """Read a picture document from a JSON string or a .json file, decoding every rational exactly."""
    text = source
    if isinstance(source, Path) or (isinstance(source, str) and not source.lstrip().startswith("{")):
        file_path = Path(source)
        assert file_path.is_file(), f"{file_path} is not a file."
        text = file_path.read_text()
    data = json.loads(text)
    validate_against_schema(data, "picture_document_schema.json")
    return PictureDocument(
        meta=data["meta"], walls=data["walls"], chambers=data["chambers"], verification=data["verification"]
    )
