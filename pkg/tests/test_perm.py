import os
import sys

import numpy as np
import pytest

MODULE_DIR = os.path.dirname(os.path.abspath('./ICPi/'))
sys.path.append(MODULE_DIR)

import ICPi
from ICPi.errors import CapacityError, ContainmentError, CycleParseError, DegreeMismatchError
from ICPi.perm import (Group, Permutation, compose, conjugate_elem, commutator_elem, cyclic_subgroup,
                       element_order_signature, group_from_elements, groups_permute, intersection, join,
                       parse_cycles, set_product, trivial_group)
from ICPi.settings import limits_override


def _group(degree, *texts):
    return Group(degree, [parse_cycles(t, degree) for t in texts])


class TestPermutation:

    def test_parse_and_render(self):
        g = parse_cycles("(1, 2 ,3)(4 5)", 5)
        assert g(1) == 2 and g(3) == 1 and g(4) == 5
        assert str(g) == "(1,2,3)(4,5)"
        assert g.order() == 6
        assert str(parse_cycles("", 3)) == "()"
        assert parse_cycles("()", 4).is_identity()

    def test_composition_acts_left_to_right(self):
        a = parse_cycles("(1,2)", 3)
        b = parse_cycles("(2,3)", 3)
        # 1 -> 2 under a, then 2 -> 3 under b
        assert (a * b)(1) == 3
        assert compose(a, b) == a * b
        assert compose(a, b) != compose(b, a)

    def test_conjugation_and_commutator(self):
        h = parse_cycles("(1,2,3)", 4)
        g = parse_cycles("(3,4)", 4)
        assert conjugate_elem(h, g) == g.inverse() * h * g
        assert commutator_elem(h, g) == h.inverse() * g.inverse() * h * g
        assert (h ** 3).is_identity()
        assert h ** -1 == h.inverse()

    @pytest.mark.parametrize("text", ["(1,2", "(1,2)x", "(1,a)", "(1,1)", "(1)(1,2)"])
    def test_malformed_cycles(self, text):
        with pytest.raises(CycleParseError):
            parse_cycles(text, 3)

    def test_point_out_of_range_names_token(self):
        with pytest.raises(CycleParseError) as excinfo:
            parse_cycles("(1,5)", 3)
        assert excinfo.value.token == "5"

    def test_not_a_bijection(self):
        with pytest.raises(ValueError):
            Permutation([0, 0, 1])


class TestGroup:

    def test_symmetric_order_and_membership(self):
        S4 = _group(4, "(1,2)", "(1,2,3,4)")
        assert S4.order == 24
        assert parse_cycles("(1,3)(2,4)", 4) in S4
        A4 = _group(4, "(1,2)(3,4)", "(1,2,3)")
        assert A4.order == 12
        assert parse_cycles("(1,2)", 4) not in A4
        assert A4.is_normal_in(S4)

    def test_trivial_group(self):
        T = trivial_group(5)
        assert T.order == 1
        assert T.is_trivial()
        assert T.is_subgroup_of(_group(5, "(1,2,3,4,5)"))

    def test_element_array_is_sorted_and_complete(self):
        S3 = _group(3, "(1,2)", "(1,2,3)")
        rows = S3.element_array()
        assert rows.shape == (6, 3)
        assert [tuple(r) for r in rows] == sorted(tuple(r) for r in rows)
        assert np.all(S3.contains_rows(rows))

    def test_contains_rows_rejects_non_members(self):
        C3 = _group(3, "(1,2,3)")
        rows = np.array([[1, 0, 2], [1, 2, 0]])
        assert C3.contains_rows(rows).tolist() == [False, True]

    def test_fingerprint_ignores_generators(self):
        a = _group(4, "(1,2)", "(1,2,3,4)")
        b = _group(4, "(1,2,3)", "(3,4)")
        assert a.fingerprint == b.fingerprint
        assert a == b

    def test_degree_mismatch(self):
        with pytest.raises(DegreeMismatchError):
            Group(3, [parse_cycles("(1,2)", 4)])

    def test_subgroup_checks_containment(self):
        A4 = _group(4, "(1,2)(3,4)", "(1,2,3)")
        with pytest.raises(ContainmentError):
            A4.subgroup([parse_cycles("(1,2)", 4)])
        assert A4.subgroup([parse_cycles("(1,2)(3,4)", 4)]).order == 2

    def test_join_and_intersection(self):
        H = cyclic_subgroup(parse_cycles("(1,2)", 4))
        K = cyclic_subgroup(parse_cycles("(3,4)", 4))
        assert join(H, K).order == 4
        S3 = _group(4, "(1,2)", "(1,2,3)")
        V4 = _group(4, "(1,2)(3,4)", "(1,3)(2,4)")
        assert intersection(S3, V4).order == 1
        assert intersection(S3, _group(4, "(1,2)", "(3,4)")).order == 2

    def test_group_from_elements(self):
        elements = [parse_cycles(t, 4) for t in ("()", "(1,2)(3,4)", "(1,3)(2,4)", "(1,4)(2,3)")]
        V4 = group_from_elements(elements, 4)
        assert V4.order == 4
        assert V4.is_abelian()

    def test_element_order_signature_of_q8(self):
        Q8 = _group(8, "(1,2,3,4)(5,6,7,8)", "(1,5,3,7)(2,8,4,6)")
        assert element_order_signature(Q8) == {1: 1, 2: 1, 4: 6}

    def test_enumeration_bound(self):
        S6 = _group(6, "(1,2)", "(1,2,3,4,5,6)")
        with limits_override(enumeration_bound=100):
            with pytest.raises(CapacityError) as excinfo:
                S6.element_array()
        assert excinfo.value.bound == 'enumeration_bound'
        assert S6.order == 720


class TestElementSets:

    def test_set_product_of_complementary_subgroups(self):
        S3 = _group(3, "(1,2)", "(1,2,3)")
        C2 = _group(3, "(1,2)")
        C3 = _group(3, "(1,2,3)")
        product = set_product(C2.element_array(), C3.element_array())
        assert product.shape[0] == 6
        assert np.array_equal(product, S3.element_array())

    def test_groups_permute(self):
        a = _group(3, "(1,2)")
        b = _group(3, "(1,3)")
        assert not groups_permute(a, b)
        assert groups_permute(a, _group(3, "(1,2,3)"))

    def test_product_bound(self):
        S4 = _group(4, "(1,2)", "(1,2,3,4)")
        with limits_override(product_bound=100):
            with pytest.raises(CapacityError):
                set_product(S4.element_array(), S4.element_array())


def test_package_exports():
    assert ICPi.__version__ == ICPi.settings.ENGINE_VERSION
    assert ICPi.perm.Group is Group
