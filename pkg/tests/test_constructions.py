import os
import sys

import numpy as np
import pytest

MODULE_DIR = os.path.dirname(os.path.abspath('./ICPi/'))
sys.path.append(MODULE_DIR)

from ICPi.constructions import (CorpusFilter, Epimorphism, GroupSpec, builtin_group, builtin_spec, corpus,
                                direct_product, direct_product_with_maps, filtered_corpus, find_spec,
                                load_group_file, named_group, quotient_group, structure_label)
from ICPi.errors import CapacityError, ConfigurationError, GroupFileError, NormalityError, UnknownFamilyError
from ICPi.perm import Group, element_order_signature, parse_cycles
from ICPi.settings import limits_override


class TestNamedGroups:

    @pytest.mark.parametrize("family,parameters,order", [
        ("cyclic", (7,), 7),
        ("dihedral", (10,), 10),
        ("symmetric", (4,), 24),
        ("alternating", (5,), 60),
        ("quaternion", (), 8),
        ("elementary_abelian", (2, 3), 8),
        ("klein_four", (), 4),
        ("special_linear_2_3", (), 24),
    ])
    def test_family_orders(self, family, parameters, order):
        assert named_group(family, *parameters).order == order

    def test_quaternion_has_one_involution(self):
        assert element_order_signature(named_group("quaternion")).get(2) == 1

    def test_elementary_abelian_exponent(self):
        G = named_group("elementary_abelian", 2, 3)
        assert set(element_order_signature(G)) == {1, 2}

    def test_invalid_families(self):
        with pytest.raises(UnknownFamilyError):
            named_group("monster")
        with pytest.raises(UnknownFamilyError):
            named_group("elementary_abelian", 4, 2)
        with pytest.raises(UnknownFamilyError):
            named_group("dihedral", 7)


class TestProducts:

    def test_direct_product_order_and_degree(self):
        G = direct_product(named_group("alternating", 5), named_group("cyclic", 5))
        assert G.degree == 10
        assert G.order == 300

    def test_projections_and_injections(self):
        A = named_group("symmetric", 3)
        B = named_group("cyclic", 4)
        G, (proj_a, proj_b), (inj_a, inj_b) = direct_product_with_maps(A, B)
        for a in A.elements():
            assert proj_a(inj_a(a)) == a
            assert proj_b(inj_a(a)).is_identity()
        for b in B.elements():
            assert proj_b(inj_b(b)) == b
        assert proj_a.kernel.order == 4

    def test_degree_cap(self):
        with limits_override(degree_cap=8):
            with pytest.raises(CapacityError):
                direct_product(named_group("symmetric", 5), named_group("symmetric", 4))


class TestEpimorphisms:

    def test_sign_map(self):
        S4 = named_group("symmetric", 4)
        odd = [sum(len(c) - 1 for c in g.cycles()) % 2 == 1 for g in S4.generators]
        sign = [parse_cycles("(1,2)" if is_odd else "()", 2) for is_odd in odd]
        epi = Epimorphism.from_images(S4, sign)
        assert epi.codomain.order == 2
        assert epi.kernel.order == 12
        assert epi(parse_cycles("(1,2)(3,4)", 4)).is_identity()
        assert not epi(parse_cycles("(1,2,3,4)", 4)).is_identity()

    def test_not_a_homomorphism(self):
        C4 = named_group("cyclic", 4)
        with pytest.raises(ValueError):
            Epimorphism(C4, named_group("cyclic", 3), [parse_cycles("(1,2,3)", 3)])


class TestQuotients:

    def test_s4_mod_v4_is_s3(self):
        S4 = named_group("symmetric", 4)
        V4 = Group(4, [parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
        Q, epi = quotient_group(S4, V4)
        assert Q.order == 6
        assert structure_label(Q) == "S3"
        assert epi.kernel == V4

    def test_epimorphism_is_multiplicative(self):
        G = named_group("dihedral", 12)
        N = Group(G.degree, [G.generators[0] ** 3])
        Q, epi = quotient_group(G, N)
        rng = np.random.default_rng(7)
        elements = list(G.elements())
        for _ in range(100):
            i, j = rng.integers(0, len(elements), size=2)
            a, b = elements[i], elements[j]
            assert epi(a * b) == epi(a) * epi(b)

    def test_preimage_contains_kernel(self):
        G = named_group("symmetric", 4)
        A4 = named_group("alternating", 4)
        V4 = Group(4, [parse_cycles("(1,2)(3,4)", 4), parse_cycles("(1,3)(2,4)", 4)])
        Q, epi = quotient_group(G, V4)
        assert epi.preimage(epi.image(A4)) == A4

    def test_trivial_kernel_is_identity(self):
        G = named_group("symmetric", 3)
        Q, epi = quotient_group(G, Group(3))
        assert Q == G

    def test_non_normal_kernel(self):
        with pytest.raises(NormalityError):
            quotient_group(named_group("symmetric", 3), Group(3, [parse_cycles("(1,2)", 3)]))


class TestGroupFiles:

    def _write(self, tmp_path, *lines):
        path = tmp_path / "groups.jsonl"
        path.write_text("\n".join(lines) + "\n", encoding="utf-8")
        return path

    def test_single_entry(self, tmp_path):
        path = self._write(tmp_path, '{"name": "S3", "degree": 3, "generators": ["(1,2)", "(1,2,3)"]}')
        specs = load_group_file(path)
        assert len(specs) == 1
        assert specs[0].build().order == 6
        assert find_spec(specs, "S3") is specs[0]

    def test_duplicate_name(self, tmp_path):
        entry = '{"name": "S3", "degree": 3, "generators": ["(1,2)"]}'
        path = self._write(tmp_path, entry, entry)
        with pytest.raises(GroupFileError) as excinfo:
            load_group_file(path)
        assert "S3" in str(excinfo.value)
        assert excinfo.value.line == 2

    def test_point_out_of_range(self, tmp_path):
        path = self._write(tmp_path, '{"name": "bad", "degree": 3, "generators": ["(1,5)"]}')
        with pytest.raises(GroupFileError) as excinfo:
            load_group_file(path)
        assert excinfo.value.field == 'generators'
        assert "range" in str(excinfo.value)

    @pytest.mark.parametrize("entry,field", [
        ('{"name": "x", "generators": []}', 'degree'),
        ('{"name": "x", "degree": 0, "generators": []}', 'degree'),
        ('{"name": "x", "degree": 3, "generators": [], "order": 1}', 'order'),
        ('{"name": "", "degree": 3, "generators": []}', 'name'),
    ])
    def test_schema_violations(self, tmp_path, entry, field):
        with pytest.raises(GroupFileError) as excinfo:
            load_group_file(self._write(tmp_path, entry))
        assert excinfo.value.field == field

    def test_missing_file(self, tmp_path):
        with pytest.raises(GroupFileError):
            load_group_file(tmp_path / "absent.jsonl")

    def test_example_file(self):
        specs = load_group_file(os.path.join(MODULE_DIR, "settings", "groups_example.jsonl"))
        assert [s.build().order for s in specs] == [6, 8, 18, 12]


class TestCorpus:

    def test_small_orders(self):
        names = {spec.name for spec, _ in corpus(max_order=10)}
        assert {"Cyc(1)", "Cyc(10)", "Sym(3)", "Dih(8)", "Q8", "EA(2^3)", "V4"} <= names
        assert "Sym(4)" not in names

    def test_family_allowlist(self):
        names = [spec.name for spec, _ in corpus(max_order=24, families=["symmetric"])]
        assert names == ["Sym(1)", "Sym(2)", "Sym(3)", "Sym(4)"]

    def test_sorted_by_order_then_name(self):
        selected = corpus(max_order=30)
        keys = [(G.order, spec.name) for spec, G in selected]
        assert keys == sorted(keys)

    def test_order_300_includes_example_product(self):
        names = {spec.name for spec, _ in corpus(max_order=300)}
        assert "Alt(5)xCyc(5)" in names

    def test_include_overrides_order_bound(self):
        names = {spec.name for spec, _ in filtered_corpus(CorpusFilter(12, None, ("Sym(5)",)))}
        assert "Sym(5)" in names and "Sym(4)" not in names

    def test_unknown_names(self):
        with pytest.raises(ConfigurationError):
            builtin_spec("Sym(9)")
        with pytest.raises(ConfigurationError):
            filtered_corpus(CorpusFilter(10, ("sporadic",)))

    def test_rebuild_from_spec(self):
        for spec, G in corpus(max_order=24):
            rebuilt = GroupSpec.from_dict(spec.to_dict()).build()
            assert rebuilt.fingerprint == G.fingerprint

    def test_filter_round_trip(self):
        corpus_filter = CorpusFilter(100, ("cyclic", "dihedral"), ("Sym(5)",))
        assert CorpusFilter.from_dict(corpus_filter.to_dict()) == corpus_filter


class TestLabels:

    @pytest.mark.parametrize("name,label", [
        ("Sym(4)", "S4"), ("Alt(4)", "A4"), ("V4", "V4"), ("Q8", "Q8"), ("Cyc(1)", "1"), ("Dih(8)", "D8"),
    ])
    def test_builtin_labels(self, name, label):
        assert structure_label(builtin_group(name)) == label

    def test_shared_signature_is_not_labelled(self):
        # Q8 x C2 and C4 x C4 both have 3 involutions and 12 elements of order 4
        Q8xC2 = direct_product(builtin_group("Q8"), builtin_group("Cyc(2)"))
        C4xC4 = direct_product(builtin_group("Cyc(4)"), builtin_group("Cyc(4)"))
        assert element_order_signature(Q8xC2) == element_order_signature(C4xC4)
        assert structure_label(Q8xC2) == "[16]"
        assert structure_label(C4xC4) == "[16]"
        assert structure_label(direct_product(builtin_group("Cyc(4)"), builtin_group("Cyc(2)"))) == "C4xC2"
