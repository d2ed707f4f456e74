"""测试命令行接口与引擎"""

import contextlib
import io
import json
import unittest

from joinframes.cli.cli import CLI, EXIT_CAP_EXCEEDED, EXIT_INPUT_ERROR, EXIT_OK, EXIT_PROPERTY_FAILS
from joinframes.config import get_limits, set_limits
from joinframes.engine.engine import Engine
from joinframes.errors import InputError
from tests import fixture_path, load_fixture


class CLITestCase(unittest.TestCase):
    """运行 CLI 并捕获输出；每个用例结束后恢复全局上限"""

    def setUp(self):
        self.saved_limits = get_limits()

    def tearDown(self):
        set_limits(self.saved_limits)

    def run_cli(self, *args):
        argv = [fixture_path(a) if a.endswith((".poset", ".yaml")) else a for a in args]
        out, err = io.StringIO(), io.StringIO()
        with contextlib.redirect_stdout(out), contextlib.redirect_stderr(err):
            code = CLI().run(argv)
        return code, out.getvalue(), err.getvalue()

    def run_json(self, *args):
        code, out, err = self.run_cli(*args, "--format", "json")
        return code, json.loads(out)


class TestQueries(CLITestCase):
    """测试单个规格上的查询命令"""

    def test_validate(self):
        code, data = self.run_json("validate", "strict.poset")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["poset"], "strict")
        verdicts = {row["spec"]: row["frame_generating"] for row in data["rows"]}
        self.assertEqual(verdicts, {"U1": True, "U2": True, "U1meetU2": False})
        self.assertFalse(data["lattice"])

    def test_frame_generating(self):
        code, data = self.run_json("frame-generating", "strict.poset", "--spec", "U1meetU2", "--method", "all")
        self.assertEqual(code, EXIT_PROPERTY_FAILS)
        self.assertFalse(data["frame_generating"])
        self.assertEqual(set(data["verdicts"].values()), {False})
        self.assertEqual(data["witness"]["p"], "h")
        code, _, _ = self.run_cli("frame-generating", "strict.poset", "--spec", "U1")
        self.assertEqual(code, EXIT_OK)

    def test_closure_and_upsilon(self):
        code, data = self.run_json("closure", "nounion.poset", "--spec", "U1", "--set", "a b c")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["closure"], ["a", "b", "c", "d"])
        self.assertFalse(data["is_ideal"])
        code, data = self.run_json("upsilon", "nounion.poset", "--spec", "U1", "--set", "a,b")
        self.assertEqual(data["upsilon"], ["a", "b", "d"])
        self.assertTrue(data["downclosed"])

    def test_ideals_table(self):
        code, out, _ = self.run_cli("ideals", "emnec_q.poset", "--spec", "Uinf")
        self.assertEqual(code, EXIT_OK)
        lines = out.splitlines()
        self.assertIn("{c}", lines)
        self.assertIn("{c,d}", lines)
        self.assertTrue(any(line.startswith("count") and line.endswith(" 2") for line in lines))

    def test_ideals_dot(self):
        code, out, _ = self.run_cli("ideals", "emnec_q.poset", "--spec", "Uinf", "--format", "dot")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(out.startswith("digraph"))

    def test_uplus(self):
        code, data = self.run_json("uplus", "nounion.poset", "--spec", "U1U2", "--set", "a b c")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["in_uplus"])
        code, _, _ = self.run_cli("uplus", "nounion.poset", "--spec", "U1", "--set", "a b c")
        self.assertEqual(code, EXIT_PROPERTY_FAILS)
        code, data = self.run_json("uplus", "nounion.poset", "--spec", "U1U2")
        self.assertIn(["a", "b", "c"], data["added"])
        self.assertFalse(data["maximal"])

    def test_maximal(self):
        code, data = self.run_json("maximal", "nounion.poset", "--spec", "U1")
        self.assertEqual(code, EXIT_PROPERTY_FAILS)
        self.assertIsNotNone(data["witness"])
        code, _, _ = self.run_cli("maximal", "nounion.poset")
        self.assertEqual(code, EXIT_OK)


class TestSpecLattice(CLITestCase):
    """测试 JF / JF⁺ 命令"""

    def test_meet(self):
        code, data = self.run_json("meet", "strict.poset", "--specs", "U1,U2")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["rows"], [["a", "b"], ["b", "c"], ["c", "d"]])

    def test_join_in_jfplus_needs_maximal(self):
        code, _, err = self.run_cli("join", "nounion.poset", "--specs", "U1,U2", "--in", "jf+")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertTrue(err.startswith("Error: "))

    def test_uminus_and_top(self):
        code, data = self.run_json("uminus", "strict.poset", "--spec", "U1meetU2")
        self.assertEqual(data["removed"], [["a", "b", "c", "d", "e", "g"]])
        code, data = self.run_json("top", "notmod.poset")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["top_is_maximal"])
        self.assertEqual(data["jf_bottom"], [])


class TestLiftAndVerify(CLITestCase):
    """测试 lift、verify 与 export"""

    def test_lift_counterexample(self):
        code, data = self.run_json("lift", "liftcex_p.poset", "liftcex_q.poset", "--map", "x:x,y:y,c:c")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["embedding"])
        self.assertTrue(data["continuous"])
        self.assertFalse(data["flags"]["injective"])
        self.assertFalse(data["flags"]["meet_preserving"])

    def test_lift_needs_u_morphism(self):
        code, data = self.run_json("lift", "chain_p.poset", "chain_q.poset", "--map", "a:m,b:b")
        self.assertEqual(code, EXIT_PROPERTY_FAILS)
        self.assertFalse(data["u_morphism"])

    def test_verify(self):
        code, data = self.run_json("verify", "--samples", "3", "--n", "3", "--laws", "core", "--workers", "1")
        self.assertEqual(code, EXIT_OK)
        self.assertTrue(data["ok"])
        self.assertEqual(data["instances"], 3)
        code, data = self.run_json("verify", "--samples", "3", "--n", "3", "--laws", "core",
                                   "--workers", "2", "--executor", "thread")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(data["config"]["executor"], "thread")

    def test_verify_config_file_with_overrides(self):
        code, data = self.run_json(
            "verify", "--config", "verify.yaml", "--n", "2", "--samples", "2", "--exhaustive", "0", "--laws", "core",
        )
        self.assertEqual(code, EXIT_OK)
        self.assertEqual((data["config"]["n"], data["config"]["min_n"]), (2, 2))
        self.assertEqual(data["config"]["seed"], 42)
        self.assertNotIn("poset_laws", data)

    def test_verify_table(self):
        code, out, _ = self.run_cli("verify", "--samples", "2", "--n", "2", "--laws", "gamma_standard")
        self.assertEqual(code, EXIT_OK)
        self.assertIn("failed=0, law=gamma_standard, passed=2, skipped=0", out)

    def test_export(self):
        code, out, _ = self.run_cli("export", "nounion.poset", "--format", "dot")
        self.assertEqual(code, EXIT_OK)
        self.assertIn('"a" -> "d";', out)
        code, data = self.run_json("export", "emnec_q.poset", "--spec", "Uinf")
        self.assertEqual(data["size"], 2)


class TestErrors(CLITestCase):
    """测试退出码"""

    def test_usage_errors(self):
        self.assertEqual(self.run_cli()[0], EXIT_INPUT_ERROR)
        self.assertEqual(self.run_cli("frobnicate")[0], EXIT_INPUT_ERROR)
        self.assertEqual(self.run_cli("closure", "nounion.poset")[0], EXIT_INPUT_ERROR)
        self.assertEqual(self.run_cli("closure", "nounion.poset", "--set", "a", "--format", "dot")[0],
                         EXIT_INPUT_ERROR)

    def test_input_errors(self):
        code, _, err = self.run_cli("closure", "nounion.poset", "--spec", "Nope", "--set", "a")
        self.assertEqual(code, EXIT_INPUT_ERROR)
        self.assertIn("Nope", err)
        self.assertEqual(self.run_cli("validate", "missing.poset")[0], EXIT_INPUT_ERROR)
        self.assertEqual(self.run_cli("closure", "nounion.poset", "--set", "a z")[0], EXIT_INPUT_ERROR)
        self.assertEqual(self.run_cli("lift", "chain_p.poset", "chain_q.poset", "--map", "a:b")[0],
                         EXIT_INPUT_ERROR)

    def test_cap_exceeded(self):
        code, _, err = self.run_cli("validate", "nounion.poset", "--max-n", "3")
        self.assertEqual(code, EXIT_CAP_EXCEEDED)
        self.assertIn("Error:", err)

    def test_lattice_table_cap(self):
        code, _, err = self.run_cli("ideals", "nounion.poset", "--spec", "@B", "--max-table-entries", "4")
        self.assertEqual(code, EXIT_CAP_EXCEEDED)
        self.assertIn("lattice table entries", err)
        code, data = self.run_json("ideals", "nounion.poset", "--spec", "@B")
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(data["covers"]), len(set(map(tuple, data["covers"]))))

    def test_version(self):
        self.assertEqual(self.run_cli("--version")[0], EXIT_OK)


class TestEngine(unittest.TestCase):
    """测试引擎的输入处理"""

    def setUp(self):
        self.engine = Engine()
        self.workspace = load_fixture("nounion.poset")

    def test_parse_set(self):
        P = self.workspace.poset
        self.assertEqual(self.engine.parse_set(self.workspace, "{a, b}"), P.mask_of(["a", "b"]))
        self.assertEqual(self.engine.parse_set(self.workspace, ""), 0)
        with self.assertRaises(InputError):
            self.engine.parse_set(self.workspace, None)

    def test_builtin_specs(self):
        self.assertEqual(self.engine.resolve_spec(self.workspace, "@B").name, "B_P")
        self.assertEqual(self.engine.resolve_spec(self.workspace, "@max").name, "U_max")
        self.assertEqual(self.engine.resolve_spec(self.workspace, "@inf").name, "U_inf")

    def test_unknown_method(self):
        with self.assertRaises(InputError):
            self.engine.frame_generating(self.workspace, "U1", "2")

    def test_every_command_has_a_handler(self):
        cli = CLI()
        for command in self.engine.get_supported_commands():
            self.assertTrue(hasattr(cli, "_run_" + command.replace("-", "_")), command)


if __name__ == "__main__":
    unittest.main()
