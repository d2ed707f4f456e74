"""测试定律注册表、随机实例上的定律与失败收缩"""

import unittest
from fractions import Fraction
from unittest.mock import patch

from hypothesis import given, settings
from hypothesis import strategies as st

from joinframes.errors import InputError
from joinframes.model.poset import build_poset
from joinframes.spec.joinspec import JoinSpec, bp, make_joinspec, u_infty
from joinframes.verify.generators import SplitMix64, random_joinspec, random_poset
from joinframes.verify.harness import VerificationHarness, VerifyConfig
from joinframes.verify.laws import LAWS, SUITES, LawInstance, select_laws
from joinframes.verify.shrink import law_failure, remove_element, shrink_failure

CHEAP_SUITES = ("core", "closure", "galois", "tgen")
HEAVY_SUITES = ("lattices", "morphisms")


def make_instance(seed: int, n: int, members: int = 3) -> LawInstance:
    rng = SplitMix64(seed)
    P = random_poset(rng, n, Fraction(1, 2))
    U = random_joinspec(rng, P, members, "U")
    V = random_joinspec(rng, P, members, "V")
    return LawInstance(seed, P, U, V)


def failing_laws(inst: LawInstance, suites) -> list:
    return [
        (law.name, message)
        for law in select_laws(suites)
        for message in [law_failure(law, inst)]
        if message is not None
    ]


def upsilon_over_members(self, mask, downclose=True):
    """只枚举 U 的成员而不是 U⁺ 的成员"""
    owner = self.owner
    base = owner.downclose_mask(mask) if downclose else mask
    result = 0
    for member in self.masks:
        if member & ~base:
            continue
        j = owner.bottom if member == 0 else self.joins[member]
        result |= 1 << j
    return result


def gamma_without_downclose(self, mask):
    """初始时不取下闭包"""
    owner = self.owner
    current = mask
    if self.contains_empty:
        current |= 1 << owner.bottom
    changed = True
    while changed:
        changed = False
        for member, join_down in self._rules:
            if member & ~current == 0 and join_down & ~current:
                current |= join_down
                changed = True
    return current


def diamond_tail() -> LawInstance:
    """a, b < c < e，d < e；U⁺ 含 {a,b,d} 而 U 不含"""
    P = build_poset("abcde", [("a", "c"), ("b", "c"), ("c", "e"), ("d", "e")])
    U = make_joinspec(P, [["a", "b"], ["c", "d"]], "U")
    return LawInstance(0, P, U, bp(P).renamed("V"))


class TestRegistry(unittest.TestCase):
    """测试定律选择"""

    def test_every_suite_has_laws(self):
        for suite in SUITES:
            self.assertTrue(select_laws([suite]), suite)
        self.assertEqual(len(select_laws()), len(LAWS))

    def test_select_by_name_keeps_registration_order(self):
        chosen = select_laws(["ideals_are_fixpoints", "covers_roundtrip"])
        self.assertEqual([law.name for law in chosen], ["covers_roundtrip", "ideals_are_fixpoints"])
        mixed = select_laws(["core", "upsilon_formula"])
        self.assertIn("upsilon_formula", [law.name for law in mixed])
        self.assertTrue(all(law.suite in ("core", "closure") for law in mixed))

    def test_unknown_name(self):
        with self.assertRaises(InputError):
            select_laws(["no_such_law"])

    def test_descriptions(self):
        self.assertTrue(all(law.description for law in LAWS.values()))


class TestLawsOnRandomInstances(unittest.TestCase):
    """随机偏序集与随机规格上全部定律成立"""

    @settings(max_examples=30, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**64 - 1), n=st.integers(min_value=1, max_value=4))
    def test_cheap_suites(self, seed, n):
        self.assertEqual(failing_laws(make_instance(seed, n), CHEAP_SUITES), [])

    @settings(max_examples=10, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**64 - 1), n=st.integers(min_value=1, max_value=3))
    def test_heavy_suites(self, seed, n):
        self.assertEqual(failing_laws(make_instance(seed, n, members=2), HEAVY_SUITES), [])

    @settings(max_examples=15, deadline=None)
    @given(seed=st.integers(min_value=0, max_value=2**64 - 1))
    def test_closure_suite_at_five_elements(self, seed):
        self.assertEqual(failing_laws(make_instance(seed, 5, members=4), ["closure"]), [])

    def test_hand_instance(self):
        self.assertEqual(failing_laws(diamond_tail(), CHEAP_SUITES), [])

    def test_meet_distribution_on_a_chain(self):
        P = build_poset("abcd", [("a", "b"), ("b", "c"), ("c", "d")])
        inst = LawInstance(0, P, u_infty(P).renamed("U"), bp(P).renamed("V"))
        law = LAWS["meet_distribution"]
        self.assertEqual(law.suite, "tgen")
        self.assertIsNone(law.check(inst))
        with patch("joinframes.verify.laws.upsilon_witness", return_value=(0b11, 0)):
            self.assertIn("not frame-generating", law.check(inst))


class TestMutants(unittest.TestCase):
    """错误的实现必须被定律发现"""

    def test_upsilon_over_members_is_caught(self):
        inst = diamond_tail()
        law = LAWS["upsilon_formula"]
        self.assertIsNone(law_failure(law, inst))
        S = inst.P.mask_of(["a", "b", "d"])
        self.assertTrue(inst.U.upsilon_mask(S) >> inst.P.index_of("e") & 1)
        with patch.object(JoinSpec, "upsilon_enumerated_mask", upsilon_over_members):
            message = law_failure(law, inst)
            self.assertIsNotNone(message)
            self.assertIn("Υ(", message)
            shrunk = shrink_failure(law, inst)
            self.assertIsNotNone(law_failure(law, shrunk))
            self.assertLessEqual(shrunk.P.n, inst.P.n)
            self.assertTrue(shrunk.U.nontrivial_masks())

    def test_gamma_without_downclose_is_caught(self):
        config = VerifyConfig(
            n=2, samples=1, exhaustive_n=2, laws=("ideals_are_fixpoints",), max_workers=1,
        )
        with patch.object(JoinSpec, "gamma_mask", gamma_without_downclose):
            report = VerificationHarness(config).run()
        self.assertFalse(report["ok"])
        self.assertGreater(report["laws"]["ideals_are_fixpoints"]["failed"], 0)
        failure = report["failures"][0]
        self.assertEqual(failure["law"], "ideals_are_fixpoints")
        self.assertIn("shrunk", failure)
        self.assertLessEqual(len(failure["shrunk"]["elements"]), len(failure["witness"]["elements"]))


class TestShrinking(unittest.TestCase):
    """测试实例收缩的基本步骤"""

    def test_remove_element_restricts_specs(self):
        inst = diamond_tail()
        smaller = remove_element(inst, inst.P.index_of("d"))
        self.assertEqual(smaller.P.labels, ("a", "b", "c", "e"))
        self.assertEqual([smaller.P.labels_of(m) for m in smaller.U.nontrivial_masks()], [["a", "b"]])
        self.assertEqual(smaller.U.name, "U")

    def test_single_element_cannot_shrink(self):
        P = build_poset(["a"], [])
        self.assertIsNone(remove_element(LawInstance(0, P, bp(P), bp(P)), 0))

    def test_passing_instance_is_unchanged_by_law_failure(self):
        inst = make_instance(7, 4)
        self.assertIsNone(law_failure(LAWS["gamma_standard"], inst))


if __name__ == "__main__":
    unittest.main()
