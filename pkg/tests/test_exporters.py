"""测试导出器"""

import json
import unittest

from joinframes.errors import InputError
from joinframes.exporters import digraph, get_exporter
from joinframes.frames.ideals import ideal_lattice
from tests import load_fixture


def count(text, fragment):
    return sum(1 for line in text.splitlines() if fragment in line)


class TestDotExporter(unittest.TestCase):
    """测试 DOT 输出"""

    def test_poset_hasse_diagram(self):
        text = get_exporter("workspace", "dot").export(load_fixture("nounion.poset"))
        self.assertTrue(text.startswith('digraph "nounion" {'))
        self.assertEqual(count(text, "[label="), 6)
        self.assertEqual(count(text, "->"), 6)
        self.assertIn('"a" -> "d";', text)

    def test_ideal_lattice(self):
        ws = load_fixture("emnec_q.poset")
        lattice = ideal_lattice(ws.get_spec("Uinf"))
        text = get_exporter("lattice", "dot").export(lattice, {"name": "ideals"})
        self.assertIn('digraph "ideals"', text)
        self.assertEqual(count(text, "[label="), 2)
        self.assertEqual(count(text, "->"), 1)
        self.assertIn('"c0" [label="{c}"];', text)

    def test_quoting(self):
        text = digraph('a"b', [("x", 'say "hi"')], [])
        self.assertIn('digraph "a\\"b"', text)
        self.assertIn('[label="say \\"hi\\""]', text)


class TestJSONAndTableExporters(unittest.TestCase):
    """测试 JSON 与表格输出"""

    def test_lattice_json(self):
        ws = load_fixture("emnec_q.poset")
        data = json.loads(get_exporter("lattice", "json").export(ideal_lattice(ws.get_spec("Uinf"))))
        self.assertEqual(data, {"size": 2, "elements": ["{c}", "{c,d}"], "covers": [["{c}", "{c,d}"]]})

    def test_workspace_json(self):
        data = json.loads(get_exporter("workspace", "json").export(load_fixture("nounion.poset")))
        self.assertEqual(data["format"], "joinframes-workspace")
        self.assertEqual(data["poset"]["elements"], ["a", "b", "c", "d", "e", "f"])
        self.assertEqual(data["joinspecs"][1], {"name": "U2", "members": [["b", "c"], ["d", "e"]]})

    def test_report_table(self):
        report = {"ok": False, "spec": "U", "witness": None, "rows": [["a", "b"], {"S": ["a"], "p": "b"}]}
        text = get_exporter("report", "table").export(report)
        lines = text.splitlines()
        self.assertEqual(lines[0], "ok       no")
        self.assertEqual(lines[1], "spec     U")
        self.assertEqual(lines[2], "witness  -")
        self.assertEqual(lines[3], "{a,b}")
        self.assertEqual(lines[4], "S={a}, p=b")

    def test_report_json_is_sorted(self):
        text = get_exporter("report", "json").export({"b": 1, "a": [True]})
        self.assertLess(text.index('"a"'), text.index('"b"'))
        self.assertTrue(text.endswith("\n"))

    def test_lattice_table(self):
        ws = load_fixture("emnec_q.poset")
        text = get_exporter("lattice", "table").export(ideal_lattice(ws.get_spec("Uinf")))
        self.assertEqual(text.splitlines(), ["{c}    covered by {c,d}", "{c,d}  covered by -"])

    def test_unknown_combination(self):
        with self.assertRaises(InputError):
            get_exporter("report", "dot")
        self.assertEqual(get_exporter("LATTICE", "JSON").get_supported_formats(), ("lattice", "json"))


if __name__ == "__main__":
    unittest.main()
