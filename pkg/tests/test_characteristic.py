import os
import sys

import pytest

MODULE_DIR = os.path.dirname(os.path.abspath('./ICPi/'))
sys.path.append(MODULE_DIR)

from ICPi.characteristic import (PrimeSet, TowerLabel, center, centralizer, characteristic_tower, check_prime,
                                 classify, commutator_subgroup, conjugates, core, derived_subgroup, f_p_star,
                                 f_star, fitting, frattini, hypercenter_pu, hypercenter_u, is_p_nilpotent,
                                 is_p_supersoluble, is_supersoluble, layer, normal_closure, normalizer, o_p,
                                 o_p_prime, omega, p_part, p_subgroup_pool, pi_part, quotient_in_U, sylow,
                                 sylow_conjugates)
from ICPi.constructions import builtin_group, named_group, structure_label
from ICPi.errors import ContainmentError, ICPiError, NotAPGroupError
from ICPi.perm import Group, element_order_signature, parse_cycles
from ICPi.settings import limits_override


def _sub(G, *texts):
    return G.subgroup([parse_cycles(t, G.degree) for t in texts])


class TestPrimes:

    def test_parts(self):
        assert p_part(24, 2) == 8
        assert p_part(24, 5) == 1
        assert pi_part(360, (2, 5)) == 40

    def test_prime_set(self):
        pi = PrimeSet.of_number(60)
        assert pi.primes == (2, 3, 5)
        assert str(pi) == "{2, 3, 5}"
        assert pi.is_pi_number(45)
        assert not pi.without(5).is_pi_number(45)
        assert PrimeSet(()).is_pi_number(1)

    def test_check_prime(self):
        assert check_prime(7) == 7
        with pytest.raises(ICPiError):
            check_prime(9)
        with pytest.raises(ICPiError):
            PrimeSet((2, 4))


class TestClosures:

    def test_normal_closure_of_transposition(self):
        S4 = builtin_group("Sym(4)")
        assert normal_closure(S4, _sub(S4, "(1,2)")) == S4

    def test_derived_and_commutator(self):
        S4 = builtin_group("Sym(4)")
        assert structure_label(derived_subgroup(S4)) == "A4"
        V4 = _sub(S4, "(1,2)(3,4)", "(1,3)(2,4)")
        assert commutator_subgroup(S4, V4, S4) == V4
        assert derived_subgroup(builtin_group("Q8")).order == 2

    def test_core_normalizer_centralizer(self):
        S4 = builtin_group("Sym(4)")
        S3 = _sub(S4, "(1,2)", "(1,2,3)")
        assert core(S4, S3).is_trivial()
        assert normalizer(S4, _sub(S4, "(1,2)(3,4)")).order == 8
        V4 = _sub(S4, "(1,2)(3,4)", "(1,3)(2,4)")
        assert centralizer(S4, V4) == V4
        assert len(conjugates(S4, _sub(S4, "(1,2)"))) == 6

    def test_center(self):
        assert center(builtin_group("Dih(8)")).order == 2
        assert center(builtin_group("Sym(3)")).is_trivial()
        assert center(builtin_group("Cyc(6)")).order == 6

    def test_requires_subgroup(self):
        A4 = builtin_group("Alt(4)")
        with pytest.raises(ContainmentError):
            normal_closure(A4, Group(4, [parse_cycles("(1,2)", 4)]))


class TestSylow:

    def test_sylow_of_s4(self):
        S4 = builtin_group("Sym(4)")
        P = sylow(S4, 2)
        assert P.order == 8
        assert element_order_signature(P) == {1: 1, 2: 5, 4: 2}
        assert len(sylow_conjugates(S4, 2)) == 3
        assert len(sylow_conjugates(S4, 3)) == 4

    def test_sylow_of_a5(self):
        A5 = builtin_group("Alt(5)")
        assert sylow(A5, 5).order == 5
        assert len(sylow_conjugates(A5, 5)) == 6

    def test_prime_not_dividing_order(self):
        assert sylow(builtin_group("Sym(3)"), 5).is_trivial()

    def test_exhaustive_pool(self):
        pool = p_subgroup_pool(builtin_group("Sym(4)"), 2)
        assert pool.is_exhaustive
        assert len(pool) == 19
        assert all(H.order in (2, 4, 8) for H in pool)

    def test_bounded_pool(self):
        S4 = named_group("symmetric", 4)
        with limits_override(exhaustive_pool_bound=10):
            pool = p_subgroup_pool(S4, 2)
        assert not pool.is_exhaustive
        assert len(pool) == 15
        assert pool.orders().count(8) == 3


class TestRadicals:

    def test_o_p_and_o_p_prime(self):
        S4 = builtin_group("Sym(4)")
        assert structure_label(o_p(S4, 2)) == "V4"
        assert o_p(S4, 3).is_trivial()
        assert o_p_prime(S4, 2).is_trivial()
        assert structure_label(o_p_prime(S4, 3)) == "V4"

    def test_fitting_and_generalized_fitting(self):
        S4 = builtin_group("Sym(4)")
        assert structure_label(fitting(S4)) == "V4"
        assert structure_label(f_star(S4)) == "V4"
        assert layer(S4).is_trivial()

    def test_f_star_of_non_soluble_groups(self):
        A5 = builtin_group("Alt(5)")
        assert f_star(A5) == A5
        assert fitting(A5).is_trivial()
        S5 = builtin_group("Sym(5)")
        assert structure_label(f_star(S5)) == "A5"
        assert layer(S5).order == 60

    def test_centralizer_of_f_star_is_contained(self):
        for name in ("Sym(4)", "Dih(12)", "Sym(5)", "Alt(5)xCyc(5)"):
            G = builtin_group(name)
            assert centralizer(G, f_star(G)).is_subgroup_of(f_star(G))

    def test_f_p_star_of_s3(self):
        S3 = builtin_group("Sym(3)")
        assert structure_label(f_p_star(S3, 3)) == "C3"
        assert f_p_star(S3, 2) == S3

    def test_frattini(self):
        Q8 = builtin_group("Q8")
        assert frattini(Q8) == center(Q8)
        assert frattini(builtin_group("Sym(4)")).is_trivial()
        assert frattini(builtin_group("Cyc(8)")).order == 4
        assert frattini(builtin_group("EA(2^3)")).is_trivial()

    def test_omega(self):
        Q8 = builtin_group("Q8")
        assert omega(Q8) == Q8
        assert omega(builtin_group("Cyc(4)")).order == 2
        assert omega(builtin_group("Dih(8)")).order == 8
        with pytest.raises(NotAPGroupError):
            omega(builtin_group("Sym(3)"))


class TestHypercenter:

    @pytest.mark.parametrize("name,order", [("Sym(4)", 1), ("Sym(3)", 6), ("Dih(8)", 8), ("Alt(4)", 1),
                                            ("Cyc(6)", 6)])
    def test_supersoluble_hypercenter(self, name, order):
        assert hypercenter_u(builtin_group(name)).order == order

    def test_p_hypercenter(self):
        S4 = builtin_group("Sym(4)")
        assert hypercenter_pu(S4, 3) == S4
        assert hypercenter_pu(S4, 2).is_trivial()
        A5xC5 = builtin_group("Alt(5)xCyc(5)")
        assert hypercenter_pu(A5xC5, 5).order == 5


class TestClassification:

    def test_s4(self):
        S4 = builtin_group("Sym(4)")
        at_3 = classify(S4, 3)
        assert not at_3.supersoluble
        assert at_3.p_supersoluble
        assert not at_3.p_nilpotent
        assert at_3.p_soluble
        assert not at_3.nilpotent
        at_2 = classify(S4, 2)
        assert not at_2.p_supersoluble
        assert not at_2.p_nilpotent
        assert at_2.to_dict()['p'] == 2

    def test_small_groups(self):
        assert is_supersoluble(builtin_group("Sym(3)"))
        assert is_supersoluble(builtin_group("Dih(8)"))
        assert not is_supersoluble(builtin_group("Alt(4)"))
        assert is_p_supersoluble(builtin_group("Alt(4)"), 3)
        assert is_p_nilpotent(builtin_group("Sym(3)"), 2)
        assert not is_p_nilpotent(builtin_group("Sym(3)"), 3)

    def test_a5_is_not_p_soluble(self):
        assert not classify(builtin_group("Alt(5)"), 5).p_soluble

    def test_quotient_in_U(self):
        S4 = builtin_group("Sym(4)")
        V4 = o_p(S4, 2)
        assert quotient_in_U(S4, V4)
        assert not quotient_in_U(S4, Group(4))
        assert quotient_in_U(S4, S4)


class TestTower:

    def test_s4_tower(self):
        S4 = builtin_group("Sym(4)")
        entries = characteristic_tower(S4, 2)
        labels = [entry.label for entry in entries]
        assert TowerLabel.SYLOW in labels
        assert TowerLabel.OMEGA not in labels
        by_label = {entry.label: entry for entry in entries if not entry.parameters}
        assert by_label[TowerLabel.DERIVED].to_dict()['structure'] == "A4"
        assert by_label[TowerLabel.Z_U].subgroup.is_trivial()

    def test_p_group_tower_has_omega(self):
        entries = characteristic_tower(builtin_group("Q8"), 2)
        assert TowerLabel.OMEGA in [entry.label for entry in entries]

    def test_every_label_is_produced(self):
        labels = {entry.label for entry in characteristic_tower(builtin_group("Sym(4)"), 2)}
        assert labels == set(TowerLabel) - {TowerLabel.OMEGA}
