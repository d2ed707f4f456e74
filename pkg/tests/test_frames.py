"""测试理想格与框架生成判定"""

import unittest
from unittest.mock import patch

import numpy as np

from joinframes.config import get_limits, set_limits
from joinframes.errors import CapExceededError, InputError, InvariantViolation, PreconditionError
from joinframes.frames.distributivity import (
    birkhoff_check,
    distributivity_mk,
    distributivity_witness,
    find_pentagon,
    is_distributive,
    is_frame,
    is_modular,
    join_irreducibles,
    modularity_witness,
)
from joinframes.frames.frame_generating import (
    METHODS,
    carrow_check,
    carrow_sides,
    condition4_witness,
    confirm_witness,
    cunique_jset,
    descent_check,
    is_frame_generating,
    meet_distribution_applies,
    meet_distribution_witness,
    method_verdict,
    strong_descent_check,
    universal_extension,
    upsilon_witness,
    verify_eta,
)
from joinframes.frames.ideals import ideal_lattice, ideal_masks
from joinframes.model.lattice import FiniteLattice
from joinframes.model.maps import PosetMap
from joinframes.model.poset import Poset, build_poset, popcount
from joinframes.spec.joinspec import JoinSpec, bp, u_alpha, u_infty, u_max
from tests import load_fixture
from tests.test_poset import antichain, chain


def n5():
    return build_poset(["z", "a", "b", "c", "t"], [("z", "a"), ("a", "b"), ("b", "t"), ("z", "c"), ("c", "t")])


def m3():
    return build_poset(
        ["z", "x", "y", "w", "t"],
        [("z", "x"), ("z", "y"), ("z", "w"), ("x", "t"), ("y", "t"), ("w", "t")],
    )


def square():
    return build_poset(["z", "x", "y", "t"], [("z", "x"), ("z", "y"), ("x", "t"), ("y", "t")])


def grid():
    """3×2 的分配格：a < b 与 c 的下集格"""
    return ideal_lattice(bp(build_poset(["a", "b", "c"], [("a", "b")]))).poset


class TestIdealLattice(unittest.TestCase):
    """测试 I_U 的枚举"""

    def test_emnec_counts(self):
        P = load_fixture("emnec_p.poset").poset
        Q = load_fixture("emnec_q.poset")
        self.assertEqual(ideal_lattice(u_max(P)).size, 4)
        lattice = ideal_lattice(Q.get_spec("Uinf"))
        self.assertEqual(lattice.size, 2)
        self.assertEqual([lattice.label(x) for x in range(lattice.size)], ["{c}", "{c,d}"])

    def test_notinj_target_is_m3(self):
        Q = load_fixture("notinj_q.poset").poset
        lattice = ideal_lattice(u_max(Q))
        self.assertEqual(lattice.size, 5)
        self.assertFalse(is_distributive(lattice))
        self.assertTrue(is_modular(lattice))

    def test_bp_ideals_are_downsets(self):
        P = load_fixture("nounion.poset").poset
        masks = ideal_masks(bp(P))
        self.assertEqual(len(masks), len({m for m in range(1 << P.n) if P.is_downclosed(m)}))
        self.assertEqual(masks[0], 0)
        self.assertEqual(masks[-1], P.full_mask)

    def test_every_ideal_is_closed(self):
        ws = load_fixture("strict.poset")
        for spec in ws.specs.values():
            for mask in ideal_masks(spec):
                self.assertEqual(spec.gamma_mask(mask), mask)
                self.assertTrue(spec.is_ideal_mask(mask))

    def test_eta_is_principal_ideal(self):
        ws = load_fixture("nounion.poset")
        lattice = ideal_lattice(ws.get_spec("U1"))
        P = ws.poset
        for p in range(P.n):
            self.assertEqual(lattice.sets[lattice.eta(p)], P.down_masks[p])

    def test_antichain_downsets_are_the_powerset(self):
        lattice = ideal_lattice(bp(antichain(8)))
        self.assertEqual(lattice.size, 256)
        # 每个 k 元子集有 8 - k 个上覆盖
        self.assertEqual(len(lattice.poset.covers), 8 * 128)
        for x, y in lattice.poset.covers:
            a, b = lattice.sets[x], lattice.sets[y]
            self.assertEqual(a & ~b, 0)
            self.assertEqual(popcount(b & ~a), 1)
        for x in range(0, 256, 37):
            for y in range(0, 256, 11):
                a, b = lattice.sets[x], lattice.sets[y]
                self.assertEqual(lattice.sets[lattice.join_table[x, y]], a | b)
                self.assertEqual(lattice.sets[lattice.meet_table[x, y]], a & b)
                self.assertEqual(lattice.join(x, y), lattice.join_table[x, y])
                self.assertEqual(lattice.meet(x, y), lattice.meet_table[x, y])
        self.assertTrue(is_distributive(lattice))

    def test_tables_agree_with_the_order(self):
        specs = list(load_fixture("strict.poset").specs.values())
        specs.append(u_max(load_fixture("notmod.poset").poset))
        for spec in specs:
            lattice = ideal_lattice(spec)
            generic = FiniteLattice.from_poset(Poset(lattice.poset.labels, lattice.poset.leq))
            np.testing.assert_array_equal(lattice.join_table, generic.join_table)
            np.testing.assert_array_equal(lattice.meet_table, generic.meet_table)
            self.assertEqual(lattice.poset.covers, generic.poset.covers)
            self.assertEqual(lattice.join_all(range(lattice.size)), lattice.top)
            self.assertEqual(lattice.meet_all(range(lattice.size)), lattice.bottom)

    def test_table_cap(self):
        previous = get_limits()
        set_limits(previous.with_overrides(max_table_entries=1000))
        try:
            with self.assertRaises(CapExceededError):
                ideal_lattice(bp(antichain(6)))
            self.assertEqual(ideal_lattice(bp(antichain(4))).size, 16)
        finally:
            set_limits(previous)


class TestDistributivity(unittest.TestCase):
    """测试分配律、模律与 Birkhoff 表示"""

    def test_small_lattices(self):
        self.assertTrue(is_distributive(chain(3)))
        self.assertTrue(is_frame(square()))
        self.assertFalse(is_distributive(n5()))
        self.assertFalse(is_modular(n5()))
        self.assertIsNotNone(find_pentagon(n5()))
        self.assertFalse(is_distributive(m3()))
        self.assertTrue(is_modular(m3()))
        self.assertIsNone(find_pentagon(m3()))

    def test_pentagon_comes_from_a_modularity_failure(self):
        L = FiniteLattice.from_poset(n5())
        x, y, z = modularity_witness(L)
        self.assertTrue(L.leq(x, z))
        bottom, a, b, c, top = find_pentagon(L)
        self.assertTrue(L.leq(a, b) and a != b)
        self.assertEqual((L.meet(a, c), L.join(b, c)), (bottom, top))
        self.assertEqual((L.meet(b, c), L.join(a, c)), (bottom, top))
        self.assertEqual(len({bottom, a, b, c, top}), 5)

    def test_triple_cap(self):
        previous = get_limits()
        set_limits(previous.with_overrides(max_triples=100))
        try:
            with self.assertRaises(CapExceededError):
                is_distributive(chain(5))
            with self.assertRaises(CapExceededError):
                find_pentagon(chain(5))
            self.assertTrue(is_modular(chain(4)))
        finally:
            set_limits(previous)

    def test_witness_is_a_real_failure(self):
        L = FiniteLattice.from_poset(m3())
        x, y, z = distributivity_witness(L)
        self.assertNotEqual(L.meet(x, L.join(y, z)), L.join(L.meet(x, y), L.meet(x, z)))

    def test_join_irreducibles_of_square(self):
        self.assertEqual(join_irreducibles(square()).labels, ["x", "y"])

    def test_birkhoff(self):
        self.assertTrue(birkhoff_check(chain(3)))
        self.assertTrue(birkhoff_check(square()))
        with self.assertRaises(PreconditionError):
            birkhoff_check(n5())

    def test_bounded_distributivity_on_lattices(self):
        for P in (chain(3), square(), n5(), m3()):
            self.assertEqual(distributivity_mk(P, 3, 3), is_distributive(P))

    def test_bounded_distributivity_on_nounion(self):
        P = load_fixture("nounion.poset").poset
        self.assertTrue(distributivity_mk(P, 3, 3))
        with self.assertRaises(PreconditionError):
            distributivity_mk(P, 1, 3)


class TestFrameGenerating(unittest.TestCase):
    """测试框架生成判定的各个方法"""

    def test_strict_meet_fails_with_witness(self):
        ws = load_fixture("strict.poset")
        report = is_frame_generating(ws.get_spec("U1meetU2"), "all")
        self.assertFalse(report.verdict)
        self.assertEqual(set(report.verdicts), set(METHODS))
        self.assertEqual(report.witness_labels(), (["a", "b", "c", "d", "e", "g"], "h"))
        data = report.to_dict()
        self.assertEqual(data["witness"], {"S": ["a", "b", "c", "d", "e", "g"], "p": "h"})
        self.assertEqual(list(data["verdicts"]), list(METHODS))

    def test_witness_is_confirmed_by_conditions_4_and_7(self):
        meet = load_fixture("strict.poset").get_spec("U1meetU2")
        S, p = is_frame_generating(meet).witness
        confirm_witness(meet, (S, p))
        a = meet.owner.index_of("a")
        with self.assertRaises(InvariantViolation):
            confirm_witness(meet, (S, a))
        with patch("joinframes.frames.frame_generating.upsilon_witness", return_value=(S, a)):
            with self.assertRaises(InvariantViolation):
                is_frame_generating(meet)

    def test_strict_parts_are_frame_generating(self):
        ws = load_fixture("strict.poset")
        for name in ("U1", "U2"):
            report = is_frame_generating(ws.get_spec(name), "all")
            self.assertTrue(report.verdict, name)
            self.assertIsNone(report.witness)

    def test_nounion_specs_are_frame_generating(self):
        ws = load_fixture("nounion.poset")
        for spec in ws.specs.values():
            self.assertTrue(is_frame_generating(spec, "all").verdict)

    def test_notmod(self):
        P = load_fixture("notmod.poset").poset
        U = u_max(P)
        self.assertFalse(is_frame_generating(U).verdict)
        self.assertFalse(is_frame_generating(U, 1).verdict)
        lattice = ideal_lattice(U)
        self.assertFalse(is_modular(lattice))
        self.assertIsNotNone(find_pentagon(lattice))

    def test_bp_is_always_frame_generating(self):
        for P in (n5(), m3(), antichain(3), load_fixture("strict.poset").poset):
            self.assertIsNone(upsilon_witness(bp(P)))
            self.assertTrue(strong_descent_check(bp(P)))

    def test_unknown_method(self):
        with self.assertRaises(InputError):
            is_frame_generating(bp(chain(2)), "2")
        with self.assertRaises(InputError):
            method_verdict(bp(chain(2)), "11")

    def test_descent_and_condition4(self):
        ws = load_fixture("strict.poset")
        meet = ws.get_spec("U1meetU2")
        self.assertFalse(descent_check(meet).verdict)
        self.assertIsNotNone(condition4_witness(meet))
        self.assertTrue(descent_check(ws.get_spec("U1")).verdict)
        self.assertIsNone(condition4_witness(ws.get_spec("U2")))


class TestMeetDistribution(unittest.TestCase):
    """测试逐点交分配给出的框架生成充分条件"""

    def test_distributive_lattices(self):
        for P in (chain(4), square(), grid()):
            U = u_infty(P)
            self.assertIsNone(meet_distribution_witness(U))
            self.assertTrue(meet_distribution_applies(U))
            self.assertTrue(is_frame_generating(U, "all").verdict)
            self.assertTrue(strong_descent_check(U))
            for alpha in range(2, P.n + 1):
                self.assertTrue(meet_distribution_applies(u_alpha(P, alpha)), alpha)

    def test_pentagon_fails_at_the_top(self):
        P = n5()
        T, p = meet_distribution_witness(u_infty(P))
        self.assertEqual(P.labels[P.join_index(T)], "t")
        self.assertFalse(meet_distribution_applies(u_infty(P)))
        self.assertIsNotNone(meet_distribution_witness(u_infty(m3())))

    def test_inclusion_hypotheses(self):
        P = build_poset(["a", "b", "c", "t"], [("a", "t"), ("b", "t"), ("c", "t")])
        U = JoinSpec(P, [P.mask_of(["a", "b"])], "U")
        # {b, c} 的并存在，但 t 不在 Γ_U({b, c}) 中
        self.assertFalse(U.in_uplus_mask(P.mask_of(["b", "c"])))
        self.assertFalse(meet_distribution_applies(U))
        self.assertFalse(meet_distribution_applies(U, alpha=2))
        self.assertFalse(meet_distribution_applies(u_max(chain(3))))
        self.assertTrue(meet_distribution_applies(bp(P)))


class TestEtaAndExtension(unittest.TestCase):
    """测试 η 的性质与泛性质扩张"""

    def test_verify_eta(self):
        for name in ("strict.poset", "nounion.poset"):
            for spec in load_fixture(name).specs.values():
                self.assertTrue(verify_eta(spec))

    def test_universal_extension(self):
        full = load_fixture("notmod_full.poset").poset
        big = load_fixture("notmod_lattice.poset").poset
        L = FiniteLattice.from_poset(big)
        e = PosetMap.from_labels(full, big, {label: label for label in full.labels})
        U = u_max(full)
        h = universal_extension(U, e, L)
        self.assertTrue(h.preserves_joins())
        ideals = ideal_lattice(U)
        for p in range(full.n):
            self.assertEqual(h(ideals.eta(p)), e(p))

    def test_extension_needs_embedding(self):
        P = antichain(2)
        L = FiniteLattice.from_poset(chain(3))
        e = PosetMap(P, L.poset, (0, 1))
        with self.assertRaises(PreconditionError):
            universal_extension(bp(P), e, L)


class TestUniquenessAndIntersections(unittest.TestCase):
    """测试唯一性集合与交的保持"""

    def test_cunique_matches_join_irreducibles(self):
        for P in (chain(3), square(), n5(), m3()):
            self.assertEqual(cunique_jset(u_max(P)).mask, join_irreducibles(P).mask)

    def test_cunique_of_bp_is_everything(self):
        P = load_fixture("nounion.poset").poset
        self.assertEqual(cunique_jset(bp(P)).mask, P.full_mask)

    def test_carrow_on_strict(self):
        ws = load_fixture("strict.poset")
        P = ws.poset
        sets = [P.mask_of(["a", "b", "c", "d", "e", "g"]), P.mask_of(["h"])]
        meet = ws.get_spec("U1meetU2")
        lhs, rhs = carrow_sides(meet, sets)
        self.assertEqual(P.labels_of(lhs), ["a", "b", "c", "e", "f"])
        self.assertEqual(P.labels_of(rhs), ["a", "b", "c", "e", "f", "h"])
        self.assertFalse(carrow_check(meet, sets))
        self.assertTrue(carrow_check(ws.get_spec("U1"), sets))

    def test_carrow_needs_sets(self):
        with self.assertRaises(InputError):
            carrow_sides(bp(chain(2)), [])


if __name__ == "__main__":
    unittest.main()
