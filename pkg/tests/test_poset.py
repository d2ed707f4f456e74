"""测试偏序集模块"""

import unittest

import numpy as np

from joinframes.config import Limits, get_limits, set_limits
from joinframes.errors import CapExceededError, OwnerMismatchError, PosetError
from joinframes.frames.distributivity import join_irreducibles
from joinframes.model.poset import (
    Poset,
    all_downsets,
    build_poset,
    downclose,
    downset_masks,
    join,
    meet,
    transitive_reduction,
    upclose,
)

NOUNION_COVERS = [("a", "d"), ("b", "d"), ("b", "e"), ("c", "e"), ("d", "f"), ("e", "f")]
STRICT_COVERS = [
    ("a", "e"), ("b", "e"), ("b", "f"), ("c", "f"), ("c", "g"), ("d", "g"),
    ("e", "h"), ("f", "h"), ("f", "i"), ("g", "i"), ("h", "j"), ("i", "j"),
]


def nounion() -> Poset:
    return build_poset("abcdef", NOUNION_COVERS)


def strict() -> Poset:
    return build_poset("abcdefghij", STRICT_COVERS)


def chain(n: int) -> Poset:
    labels = [chr(ord("a") + i) for i in range(n)]
    return build_poset(labels, list(zip(labels, labels[1:])))


def antichain(n: int) -> Poset:
    return build_poset([chr(ord("a") + i) for i in range(n)], [])


class TestBuildPoset(unittest.TestCase):
    """测试偏序集构造"""

    def test_singleton(self):
        P = build_poset(["a"], [])
        self.assertEqual(P.n, 1)
        self.assertTrue(P.le(0, 0))
        self.assertEqual(P.bottom, 0)
        self.assertEqual(P.top, 0)

    def test_transitivity(self):
        P = nounion()
        self.assertTrue(P.le(P.index_of("a"), P.index_of("f")))
        self.assertFalse(P.le(P.index_of("a"), P.index_of("e")))
        self.assertIsNone(P.bottom)
        self.assertEqual(P.labels[P.top], "f")

    def test_cycle_is_rejected(self):
        with self.assertRaises(PosetError) as ctx:
            build_poset(["a", "b"], [("a", "b"), ("b", "a")])
        self.assertIn("cycle", str(ctx.exception))

    def test_duplicate_and_unknown_labels(self):
        with self.assertRaises(PosetError):
            build_poset(["a", "a"], [])
        with self.assertRaises(PosetError):
            build_poset(["a"], [("a", "z")])
        with self.assertRaises(PosetError):
            build_poset([], [])

    def test_redundant_covers_are_reduced(self):
        P = build_poset("abc", [("a", "b"), ("b", "c"), ("a", "c")])
        self.assertEqual(P.covers, ((0, 1), (1, 2)))

    def test_covers_of_nounion(self):
        P = nounion()
        labelled = {(P.labels[i], P.labels[j]) for i, j in P.covers}
        self.assertEqual(labelled, set(NOUNION_COVERS))

    def test_from_leq_validates(self):
        with self.assertRaises(PosetError):
            Poset.from_leq(["a", "b"], np.array([[True, True], [True, True]]))
        with self.assertRaises(PosetError):
            Poset.from_leq(["a", "b"], np.array([[False, True], [False, True]]))
        P = Poset.from_leq(["a", "b"], np.array([[True, True], [False, True]]))
        self.assertEqual(P, chain(2))

    def test_size_cap(self):
        previous = get_limits()
        set_limits(Limits(max_n=3))
        try:
            with self.assertRaises(CapExceededError):
                chain(4)
        finally:
            set_limits(previous)

    def test_order_matrix_is_readonly(self):
        P = chain(3)
        with self.assertRaises(ValueError):
            P.leq[0, 2] = False


class TestClosures(unittest.TestCase):
    """测试下闭包、上闭包与并/交"""

    def test_downclose(self):
        P = nounion()
        self.assertEqual(downclose(P, P.elemset(["d"])).labels, ["a", "b", "d"])
        self.assertEqual(downclose(P, P.elemset(0)).labels, [])
        Q = strict()
        self.assertEqual(downclose(Q, Q.elemset(["e", "g"])).labels, ["a", "b", "c", "d", "e", "g"])

    def test_upclose(self):
        P = nounion()
        self.assertEqual(upclose(P, P.elemset(["b"])).labels, ["b", "d", "e", "f"])

    def test_join_and_meet(self):
        P = nounion()
        self.assertEqual(join(P, P.elemset(["a", "b"])), "d")
        self.assertEqual(join(P, P.elemset(["a", "c"])), "f")
        self.assertIsNone(meet(P, P.elemset(["a", "b"])))
        self.assertEqual(meet(P, P.elemset(["d", "e"])), "b")
        self.assertIsNone(join(antichain(2), antichain(2).elemset(["a", "b"])))
        Q = strict()
        self.assertEqual(join(Q, Q.elemset(["b", "g"])), "i")

    def test_join_of_empty_set_is_bottom(self):
        P = chain(3)
        self.assertEqual(join(P, P.elemset(0)), "a")
        self.assertIsNone(nounion().join_index(0))

    def test_owner_mismatch(self):
        with self.assertRaises(OwnerMismatchError):
            downclose(nounion(), chain(2).elemset(["a"]))

    def test_subposet_and_linear_extension(self):
        P = nounion()
        sub = P.subposet(P.mask_of(["a", "d", "f"]))
        self.assertEqual(sub.labels, ("a", "d", "f"))
        self.assertTrue(np.array_equal(sub.leq, chain(3).leq))
        order = P.linear_extension
        for i, j in P.covers:
            self.assertLess(order.index(i), order.index(j))

    def test_is_lattice(self):
        self.assertTrue(chain(3).is_lattice())
        self.assertFalse(nounion().is_lattice())
        self.assertFalse(antichain(2).is_lattice())


class TestDownsets(unittest.TestCase):
    """测试下集枚举"""

    def test_small_counts(self):
        self.assertEqual(len(all_downsets(antichain(2))), 4)
        self.assertEqual(len(all_downsets(chain(3))), 4)

    def test_against_brute_force(self):
        P = nounion()
        brute = {m for m in range(1 << P.n) if P.is_downclosed(m)}
        self.assertEqual(set(downset_masks(P)), brute)
        masks = [S.mask for S in all_downsets(P)]
        self.assertEqual(masks[0], 0)
        self.assertEqual(masks[-1], P.full_mask)

    def test_cap(self):
        with self.assertRaises(CapExceededError):
            downset_masks(antichain(5), cap=10)

    def test_transitive_reduction_of_chain(self):
        P = chain(4)
        reduction = transitive_reduction(P.leq)
        self.assertEqual(int(reduction.sum()), 3)


class TestJoinIrreducibles(unittest.TestCase):
    """测试并不可约元"""

    def test_chain(self):
        P = chain(3)
        self.assertEqual(join_irreducibles(P).labels, ["b", "c"])

    def test_powerset_of_two_atoms(self):
        P = build_poset(["z", "x", "y", "t"], [("z", "x"), ("z", "y"), ("x", "t"), ("y", "t")])
        self.assertEqual(join_irreducibles(P).labels, ["x", "y"])


if __name__ == "__main__":
    unittest.main()
