import os
import sys

import pytest

MODULE_DIR = os.path.dirname(os.path.abspath('./ICPi/'))
sys.path.append(MODULE_DIR)

from ICPi.constructions import builtin_group, named_group, structure_label
from ICPi.errors import CapacityError, ICPiError, NotAPGroupError
from ICPi.lattice import (all_subgroups, chief_factor_pairs, conjugacy_classes, cyclic_subgroups,
                          maximal_subgroups, maximal_subgroups_p_group, minimal_normal_subgroups, normal_subgroups,
                          p_group_prime, pairs_below, subgroups_of_order)
from ICPi.perm import Group, parse_cycles
from ICPi.settings import limits_override


def _labels(subgroups):
    return [structure_label(H) for H in subgroups]


class TestNormalLattice:

    def test_s4(self):
        S4 = builtin_group("Sym(4)")
        normals = normal_subgroups(S4)
        assert _labels(normals) == ["1", "V4", "A4", "S4"]
        assert normals.is_exhaustive

    def test_simple_group(self):
        A5 = builtin_group("Alt(5)")
        assert normal_subgroups(A5).orders() == [1, 60]

    def test_abelian_group_every_subgroup_is_normal(self):
        G = builtin_group("EA(2^3)")
        assert len(normal_subgroups(G)) == len(all_subgroups(G)) == 16

    def test_minimal_normal_subgroups(self):
        assert _labels(minimal_normal_subgroups(builtin_group("Sym(4)"))) == ["V4"]
        assert minimal_normal_subgroups(builtin_group("Dih(8)")).orders() == [2]
        assert minimal_normal_subgroups(builtin_group("Cyc(6)")).orders() == [2, 3]

    def test_conjugacy_classes_of_s4(self):
        sizes = sorted(cls.shape[0] for cls in conjugacy_classes(builtin_group("Sym(4)")))
        assert sizes == [1, 3, 6, 6, 8]

    def test_members_are_deduplicated(self):
        S3 = builtin_group("Sym(3)")
        normals = normal_subgroups(S3)
        A3 = Group(3, [parse_cycles("(1,3,2)", 3)])
        assert A3 in normals
        assert normals.index_of(A3) == 1


class TestChiefFactors:

    def test_s4_pairs(self):
        pairs = chief_factor_pairs(builtin_group("Sym(4)"))
        assert [(structure_label(p.K), structure_label(p.L)) for p in pairs] == [("1", "V4"), ("V4", "A4"),
                                                                                 ("A4", "S4")]
        assert [p.factor_order for p in pairs] == [4, 3, 2]
        assert [p.is_cyclic for p in pairs] == [False, True, True]
        assert pairs[0].is_abelian

    def test_d8_has_seven_covering_pairs(self):
        pairs = chief_factor_pairs(builtin_group("Dih(8)"))
        assert len(pairs) == 7
        assert all(p.factor_order == 2 for p in pairs)

    def test_a5_factor_is_not_abelian(self):
        pairs = chief_factor_pairs(builtin_group("Alt(5)"))
        assert len(pairs) == 1
        assert not pairs[0].is_abelian
        assert pairs[0].primes == (2, 3, 5)

    def test_pairs_below(self):
        S4 = builtin_group("Sym(4)")
        A4 = named_group("alternating", 4)
        assert [p.factor_order for p in pairs_below(S4, A4)] == [4, 3]


class TestSubgroups:

    @pytest.mark.parametrize("name,count", [("Sym(3)", 6), ("Dih(8)", 10), ("Q8", 6), ("Sym(4)", 30)])
    def test_subgroup_counts(self, name, count):
        assert len(all_subgroups(builtin_group(name))) == count

    def test_cyclic_subgroups_of_q8(self):
        Q8 = builtin_group("Q8")
        cyclic = cyclic_subgroups(Q8)
        assert cyclic.orders() == [1, 2, 4, 4, 4]
        assert len(subgroups_of_order(Q8, 4)) == 3
        assert len(subgroups_of_order(Q8, 8)) == 1

    def test_subgroups_of_order_requires_divisor(self):
        with pytest.raises(ICPiError):
            subgroups_of_order(builtin_group("Sym(3)"), 4)

    def test_subgroup_bound(self):
        with limits_override(subgroup_bound=20):
            with pytest.raises(CapacityError) as excinfo:
                all_subgroups(builtin_group("Sym(4)"))
        assert excinfo.value.bound == 'subgroup_bound'

    def test_maximal_subgroups_of_s4(self):
        assert sorted(maximal_subgroups(builtin_group("Sym(4)")).orders()) == [6, 6, 6, 6, 8, 8, 8, 12]


class TestPGroups:

    def test_p_group_prime(self):
        assert p_group_prime(builtin_group("Dih(8)")) == 2
        assert p_group_prime(builtin_group("Sym(3)")) is None
        assert p_group_prime(builtin_group("Cyc(1)")) is None

    @pytest.mark.parametrize("name,count", [("Dih(8)", 3), ("Cyc(8)", 1), ("EA(2^3)", 7), ("Q8", 3)])
    def test_maximal_subgroups_p_group(self, name, count):
        P = builtin_group(name)
        maximal = maximal_subgroups_p_group(P)
        assert len(maximal) == count
        assert all(M.order * 2 == P.order for M in maximal)

    def test_maximal_subgroups_of_d8_are_c4_and_two_klein_fours(self):
        assert sorted(_labels(maximal_subgroups_p_group(builtin_group("Dih(8)")))) == ["C4", "V4", "V4"]

    def test_agrees_with_general_enumeration(self):
        P = builtin_group("EA(3^2)")
        assert len(maximal_subgroups_p_group(P)) == len(maximal_subgroups(P)) == 4

    def test_not_a_p_group(self):
        with pytest.raises(NotAPGroupError):
            maximal_subgroups_p_group(builtin_group("Sym(3)"))
