import unittest
from copy import deepcopy
from pathlib import Path

from parameterized import param, parameterized

from wallchamber.utils import DeepDict, dict_deep_update, load_dict_from_file
from wallchamber.utils.report import make_report, merge_reports, record_violation

SETTINGS_FOLDER = Path(__file__).parent


class TestDeepDict(unittest.TestCase):
    def setUp(self):
        self.report = DeepDict()
        self.report["chambers"]["counts"]["2"] = 6
        self.data = {"chambers": {"counts": {"2": 6}}}

    def test_nested_access(self):
        self.assertEqual(self.report["chambers"]["counts"]["2"], 6)
        self.assertIsInstance(self.report["missing"], DeepDict)

    def test_to_dict(self):
        self.assertEqual(self.report.to_dict(), self.data)
        self.assertEqual(dict(self.report), self.data)

    def test_wraps_nested_dicts(self):
        report = DeepDict(self.data)
        self.assertIsInstance(report["chambers"]["counts"], DeepDict)

    def test_repr(self):
        self.assertEqual(repr(self.report), "DeepDict: {'chambers': {'counts': {'2': 6}}}")

    def test_deep_update(self):
        self.report.deep_update({"chambers": {"counts": {"3": 20}}, "rank": 3})
        self.assertEqual(self.report.to_dict(), {"chambers": {"counts": {"2": 6, "3": 20}}, "rank": 3})

    def test_deep_update_kwargs(self):
        self.report.deep_update(rank=2)
        self.assertEqual(self.report["rank"], 2)

    def test_deepcopy(self):
        copied = deepcopy(self.report)
        copied["chambers"]["counts"]["2"] = 0
        self.assertEqual(self.report["chambers"]["counts"]["2"], 6)


class TestDictDeepUpdate(unittest.TestCase):
    def test_nested_merge(self):
        result = dict_deep_update(dict(seed=0, limits=dict(rank=4, depth=3)), dict(limits=dict(depth=5)))
        self.assertEqual(result, dict(seed=0, limits=dict(rank=4, depth=5)))

    def test_lists_are_replaced(self):
        result = dict_deep_update(dict(sequence=[1, 2]), dict(sequence=[3]))
        self.assertEqual(result, dict(sequence=[3]))

    def test_copy(self):
        original = dict(limits=dict(rank=4))
        dict_deep_update(original, dict(limits=dict(rank=2)))
        self.assertEqual(original, dict(limits=dict(rank=4)))
        dict_deep_update(original, dict(limits=dict(rank=2)), copy=False)
        self.assertEqual(original, dict(limits=dict(rank=2)))

    def test_non_mapping_input(self):
        with self.assertWarnsRegex(UserWarning, "should be a dict"):
            self.assertEqual(dict_deep_update(None, dict(seed=1)), dict(seed=1))


class TestLoadDictFromFile(unittest.TestCase):
    @parameterized.expand([param("yaml", "verification_settings.yml"), param("json", "verification_settings.json")])
    def test_load(self, name, file_name):
        settings = load_dict_from_file(SETTINGS_FOLDER / file_name)
        self.assertEqual(settings, dict(seed=11, samples=25, max_stt_rank=3))

    def test_wrong_suffix(self):
        with self.assertRaisesRegex(AssertionError, "is not a valid yaml or .json file"):
            load_dict_from_file(Path(__file__))


class TestReports(unittest.TestCase):
    def test_violation_fails_the_report(self):
        report = make_report(chamber_count=6)
        self.assertTrue(report["passed"])
        record_violation(report, "chamber_count", expected=6, found=5)
        self.assertFalse(report["passed"])
        self.assertEqual(report["violations"], [dict(check="chamber_count", expected=6, found=5)])

    def test_merge_tags_the_suite(self):
        failing = make_report()
        record_violation(failing, "complete")
        merged = merge_reports([("fan", failing), ("structure", make_report())], quiver="3; 2>1,3>2,3>1")
        self.assertFalse(merged["passed"])
        self.assertEqual(merged["violations"], [dict(check="complete", suite="fan")])
        self.assertTrue(merged["structure"]["passed"])
        self.assertEqual(merged["quiver"], "3; 2>1,3>2,3>1")
