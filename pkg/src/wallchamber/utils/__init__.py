from .dict import DeepDict, dict_deep_update, load_dict_from_file
from .json_schema import (
    ExactEncoder,
    decode_rational,
    encode_rational,
    get_base_schema,
    get_schema_from_method_signature,
    load_schema,
    validate_against_schema,
)
from .types import FilePathType, FolderPathType, RatMatrix, RatVec
from .report import make_report, merge_reports, record_violation
