import json
import unittest
from fractions import Fraction

import pytest
from jsonschema import ValidationError

from wallchamber.pictures import NakayamaPicture, RegularPicture
from wallchamber.tools import PictureDocument, choose_pole, document_from_json, render_svg


class TestPictureDocument(unittest.TestCase):
    @classmethod
    def setUpClass(cls):
        cls.document = RegularPicture(quiver="4; 1>2,2>3,4>3,1>4").to_document()

    def test_json_round_trip(self):
        self.assertEqual(document_from_json(self.document.to_json()), self.document)

    def test_rationals_are_strings(self):
        data = json.loads(self.document.to_json())
        self.assertEqual(data["meta"]["eta"], ["1", "1", "1", "1"])
        corners = [corner["vector"] for chamber in data["chambers"] for corner in chamber["corners"]]
        self.assertIn(["-1/2", "1", "-1/2", "1"], corners)

    def test_cones_are_rebuilt(self):
        self.assertEqual(len(self.document.wall_cones()), len(self.document.walls))
        chambers = self.document.chamber_cones()
        self.assertEqual(len(chambers), 18)
        self.assertTrue(all(chamber.dim == 3 for chamber in chambers))
        self.assertTrue(all(self.document.space().contains_cone(chamber) for chamber in chambers))

    def test_sorted_walls(self):
        shuffled = PictureDocument(
            meta=self.document.meta,
            walls=list(reversed(self.document.walls)),
            chambers=self.document.chambers,
            verification=self.document.verification,
        )
        self.assertEqual(shuffled.to_json(), self.document.to_json())


def test_read_from_file(tmp_path):
    document = NakayamaPicture(rank=2).to_document()
    file_path = document.write(tmp_path / "nakayama.json")
    assert document_from_json(file_path) == document
    assert document_from_json(str(file_path)) == document


def test_invalid_document():
    data = json.loads(NakayamaPicture(rank=1).to_document().to_json())
    data["walls"][0]["label"] = [0.5]
    with pytest.raises(ValidationError):
        document_from_json(json.dumps(data))


def test_svg_on_a_circle():
    document = RegularPicture(quiver="3; 2>1,3>2,3>1").to_document()
    drawing = render_svg(document)
    assert drawing.startswith("<svg")
    assert drawing.count("<circle") >= 6


def test_svg_is_deterministic():
    document = NakayamaPicture(rank=3).to_document()
    assert render_svg(document, seed=5) == render_svg(document, seed=5)
    pole = choose_pole(document, seed=5)
    assert all(isinstance(value, Fraction) for value in pole)
    assert not any(wall.cone.contains(pole) for wall in document.wall_cones())


def test_svg_needs_a_small_sphere():
    document = NakayamaPicture(rank=4).to_document()
    with pytest.raises(ValueError, match="Only pictures on a circle or a 2-sphere"):
        render_svg(document)
