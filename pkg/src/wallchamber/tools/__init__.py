from .document import PictureDocument, document_from_json
from .svg import choose_pole, render_svg
from .verification import load_verification_settings, run_suites
