import logging
import os
import sys

import pytest

MODULE_DIR = os.path.dirname(os.path.abspath('./ICPi/'))
sys.path.append(MODULE_DIR)

from ICPi.characteristic import o_p
from ICPi.constructions import CorpusFilter, builtin_group, builtin_spec, named_group
from ICPi.errors import ConfigurationError
from ICPi.perm import parse_cycles
from ICPi.settings import params
from ICPi.theorems import (CampaignReport, CampaignRunner, ConclusionStatus, HypothesisStatus, InstanceStrategy,
                           TheoremId, TheoremReport, Verdict, check_by_id, check_theorem_a, check_theorem_bcd,
                           d_range, reproduce, reproduces, run_campaign, run_group, run_suite)
from ICPi.utils.cache import ResultCache


def _sub(G, *texts):
    return G.subgroup([parse_cycles(t, G.degree) for t in texts])


class TestTheoremA:

    def test_d8_is_confirmed(self):
        D8 = builtin_group("Dih(8)")
        report = check_theorem_a(D8, N=D8, X=D8, p=2, d=2)
        assert report.verdict is Verdict.CONFIRMED
        assert report.details['z_pu_order'] == 8
        # order 2 subgroups, then cyclic subgroups of order 4
        assert len(report.details['conditions']) == 2

    def test_s4_hypothesis_fails(self):
        S4 = builtin_group("Sym(4)")
        A4 = named_group("alternating", 4)
        report = check_theorem_a(S4, N=A4, X=o_p(S4, 2), p=2, d=2)
        assert report.hypothesis_status is HypothesisStatus.NOT_SATISFIED
        assert report.verdict is Verdict.VACUOUS
        assert report.details['conditions'][0]['witness']['index'] == 3

    def test_prime_not_dividing_n(self):
        S3 = builtin_group("Sym(3)")
        A3 = _sub(S3, "(1,2,3)")
        report = check_theorem_a(S3, N=A3, X=A3, p=2, d=2)
        assert report.hypothesis_status is HypothesisStatus.NOT_APPLICABLE
        assert report.verdict is Verdict.VACUOUS
        assert "does not divide" in report.reason

    def test_empty_d_range(self):
        S3 = builtin_group("Sym(3)")
        A3 = _sub(S3, "(1,2,3)")
        assert d_range(A3, 3) == []
        report = check_theorem_a(S3, N=A3, X=A3, p=3, d=3)
        assert report.hypothesis_status is HypothesisStatus.NOT_APPLICABLE

    def test_missing_parameter(self):
        with pytest.raises(ConfigurationError):
            check_by_id(builtin_group("Sym(3)"), TheoremId.LEM_OVER, H=builtin_group("Sym(3)"))


class TestTheoremsBCD:

    def test_minimal_subgroups_of_s3(self):
        S3 = builtin_group("Sym(3)")
        report = check_theorem_bcd(S3, 'C', N=_sub(S3, "(1,2,3)"), p=3)
        assert report.verdict is Verdict.CONFIRMED
        assert report.details['in_z_u']

    def test_maximal_subgroups_of_s3(self):
        S3 = builtin_group("Sym(3)")
        report = check_theorem_bcd(S3, 'D', N=S3, p=2)
        assert report.verdict is Verdict.CONFIRMED
        assert report.details['P_order'] == 2

    def test_maximal_subgroups_of_d8(self):
        D8 = builtin_group("Dih(8)")
        report = check_by_id(D8, TheoremId.THM_3_2_MAX, P=D8, p=2)
        assert report.verdict is Verdict.CONFIRMED
        assert report.details['conditions'][0]['checked'] == 3

    def test_order_d_on_s4(self):
        S4 = builtin_group("Sym(4)")
        report = check_by_id(S4, TheoremId.THM_B_ORDER_D, P=o_p(S4, 2), p=2, d=2)
        assert report.verdict is Verdict.VACUOUS
        assert report.conclusion_status is ConclusionStatus.FALSE

    def test_p_group_required(self):
        S3 = builtin_group("Sym(3)")
        report = check_by_id(S3, TheoremId.THM_3_1_MIN, P=S3, p=2)
        assert report.hypothesis_status is HypothesisStatus.NOT_APPLICABLE

    def test_unknown_variant(self):
        with pytest.raises(ConfigurationError):
            check_theorem_bcd(builtin_group("Sym(3)"), 'E', N=builtin_group("Sym(3)"), p=2)


class TestCorollaries:

    def test_star_on_s3(self):
        S3 = builtin_group("Sym(3)")
        report = check_by_id(S3, TheoremId.COR_STAR, E=S3)
        assert report.verdict is Verdict.CONFIRMED
        assert report.details['suitable_x']['X_order'] == 3

    def test_f_quotient_on_s4(self):
        S4 = builtin_group("Sym(4)")
        V4 = o_p(S4, 2)
        report = check_by_id(S4, TheoremId.COR_F_QUOTIENT, E=named_group("alternating", 4), X=V4)
        assert report.hypothesis_status is HypothesisStatus.NOT_SATISFIED
        assert report.conclusion_status is ConclusionStatus.FALSE

    def test_p_and_d_go_together(self):
        S4 = builtin_group("Sym(4)")
        V4 = o_p(S4, 2)
        report = check_by_id(S4, TheoremId.COR_F_QUOTIENT, E=V4, X=V4, p=2)
        assert report.hypothesis_status is HypothesisStatus.NOT_APPLICABLE


class TestLemmas:

    def test_one_of_on_c4(self):
        C4 = builtin_group("Cyc(4)")
        report = check_by_id(C4, TheoremId.LEM_ONE_OF, N=C4, p=2, d=2)
        assert report.verdict is Verdict.CONFIRMED
        assert report.details['case'] == 'a'

    def test_necessity_on_s4(self):
        S4 = builtin_group("Sym(4)")
        report = check_by_id(S4, TheoremId.LEM_NECESSITY, p=3, L=_sub(S4, "(1,2,3)"))
        assert report.verdict is Verdict.CONFIRMED
        aggregated = check_by_id(S4, TheoremId.LEM_NECESSITY, p=3)
        assert aggregated.verdict is Verdict.CONFIRMED
        assert aggregated.details['checked'] == 4

    def test_over_and_ove(self):
        S4 = builtin_group("Sym(4)")
        report = check_by_id(S4, TheoremId.LEM_OVER, H=_sub(S4, "(1,2)"), N=o_p(S4, 2))
        assert report.verdict is Verdict.CONFIRMED
        G = builtin_group("Sym(3)xCyc(2)")
        report = check_by_id(G, TheoremId.LEM_OVE_II, H=_sub(G, "(1,2)"), N=_sub(G, "(1,2,3)"))
        assert report.verdict is Verdict.CONFIRMED
        report = check_by_id(G, TheoremId.LEM_OVE_II, H=_sub(G, "(1,2)(4,5)"), N=_sub(G, "(4,5)"))
        assert report.hypothesis_status is HypothesisStatus.NOT_APPLICABLE

    def test_non_normal_n_is_not_applicable(self):
        S3 = builtin_group("Sym(3)")
        report = check_by_id(S3, TheoremId.LEM_OVER, H=S3, N=_sub(S3, "(1,2)"))
        assert report.hypothesis_status is HypothesisStatus.NOT_APPLICABLE
        assert report.verdict is Verdict.VACUOUS

    def test_satisfies_on_d8(self):
        D8 = builtin_group("Dih(8)")
        report = check_by_id(D8, TheoremId.LEM_SATISFIES, T=_sub(D8, "(1,3)(2,4)"), L=_sub(D8, "(1,3)"))
        assert report.verdict is Verdict.CONFIRMED

    def test_phi_sylow_and_jg(self):
        D8 = builtin_group("Dih(8)")
        assert check_by_id(D8, TheoremId.LEM_PHI, P=D8).verdict is Verdict.CONFIRMED
        S4 = builtin_group("Sym(4)")
        report = check_by_id(S4, TheoremId.LEM_SYLOW, p=3)
        assert report.verdict is Verdict.CONFIRMED
        assert report.details['o_p_prime_order'] == 4
        assert check_by_id(S4, TheoremId.LEM_SYLOW, p=5).hypothesis_status is HypothesisStatus.NOT_APPLICABLE
        S3 = builtin_group("Sym(3)")
        assert check_by_id(S3, TheoremId.LEM_JG_U, E=_sub(S3, "(1,2,3)")).verdict is Verdict.CONFIRMED

    def test_su_both_parts(self):
        S4 = builtin_group("Sym(4)")
        V4 = o_p(S4, 2)
        assert check_by_id(S4, TheoremId.LEM_SU_U, E=V4).verdict is Verdict.VACUOUS
        assert check_by_id(S4, TheoremId.LEM_SU_U, E=V4, p=3).verdict is Verdict.CONFIRMED

    def test_equivalent(self):
        S4 = builtin_group("Sym(4)")
        report = check_by_id(S4, TheoremId.LEM_EQUIVALENT, U=S4, V=o_p(S4, 2), W=_sub(S4, "(1,2)"))
        assert report.verdict is Verdict.CONFIRMED
        assert report.details == {'first': True, 'second': True}


class TestReports:

    def test_round_trip_and_reproduce(self):
        D8 = builtin_group("Dih(8)")
        report = check_theorem_a(D8, N=D8, X=D8, p=2, d=2, group_name="Dih(8)")
        data = report.to_dict()
        assert data['verdict'] == "confirmed"
        assert data['instance']['parameters']['p'] == 2
        restored = TheoremReport.from_dict(data)
        assert restored.instance == report.instance
        assert restored.verdict is Verdict.CONFIRMED
        assert reproduce(data).verdict is Verdict.CONFIRMED
        assert reproduces(data)

    def test_unknown_theorem_id(self):
        with pytest.raises(ConfigurationError):
            TheoremId.parse("thm_Z")
        assert TheoremId.parse_list(["all"]) == list(TheoremId)


class TestStrategies:

    def test_minimal_instances_of_s3(self):
        instances, truncated = InstanceStrategy().instances(builtin_group("Sym(3)"), TheoremId.THM_C_MINIMAL)
        assert [(H['N'].order, H['p']) for H in instances] == [(3, 3), (6, 2), (6, 3)]
        assert truncated == 0

    def test_instance_cap(self):
        strategy = InstanceStrategy(max_instances_per_check=2)
        instances, truncated = strategy.instances(builtin_group("Sym(3)"), TheoremId.THM_C_MINIMAL)
        assert len(instances) == 2
        assert truncated == 1

    def test_every_enumerated_instance_is_valid(self):
        G = builtin_group("Sym(4)")
        strategy = InstanceStrategy()
        for theorem_id in TheoremId:
            instances, _ = strategy.instances(G, theorem_id)
            for parameters in instances:
                report = check_by_id(G, theorem_id, **parameters)
                assert report.verdict is not Verdict.COUNTEREXAMPLE, (theorem_id, report.to_dict())


class TestSuites:

    @pytest.mark.parametrize("name", ["kernel_oracle", "classical_implications", "necessity",
                                      "algebraic_invariants"])
    def test_suites_are_clean(self, name):
        groups = [(n, builtin_group(n)) for n in ("Sym(3)", "Dih(8)", "Alt(4)")]
        report = run_suite(name, groups)
        assert report.checked > 0
        assert report.violations == []

    def test_classical_suite_covers_largest_corpus_group(self):
        report = run_suite("classical_implications", [("Alt(5)xCyc(5)", builtin_group("Alt(5)xCyc(5)"))])
        assert report.skipped == []
        assert report.checked > 0
        assert report.violations == []
        assert params.limits.subgroup_bound == 256

    def test_unknown_suite(self):
        with pytest.raises(ConfigurationError):
            run_suite("fuzzing", [])


class TestCampaign:

    def test_serial_campaign(self):
        runner = CampaignRunner(CorpusFilter(8, ("cyclic", "dihedral")),
                                [TheoremId.THM_C_MINIMAL, TheoremId.LEM_NECESSITY], jobs=1)
        report = runner.run()
        assert report.is_clean()
        assert report.groups[0] == "Cyc(1)"
        assert report.tallies['counterexamples'] == 0
        assert report.tallies['confirmed'] > 0
        restored = CampaignReport.from_dict(report.to_dict())
        assert restored.tallies == report.tallies
        assert restored.groups == report.groups

    def test_run_campaign_up_to_order_12(self):
        report = run_campaign(CorpusFilter(12), [TheoremId.THM_C_MINIMAL, TheoremId.LEM_NECESSITY],
                              InstanceStrategy(), jobs=1)
        assert report.tallies['counterexamples'] == 0
        assert "Alt(4)" in report.groups
        assert not report.errors

    def test_serial_group_logs_to_package_logger(self, caplog):
        caplog.set_level(logging.INFO)
        result = run_group(builtin_spec("Sym(3)"), [TheoremId.THM_C_MINIMAL.value], InstanceStrategy().to_dict(),
                           {'limits': params.limits.to_dict(), 'checks': {'self_check': True}})
        assert result['instances'] > 0
        summaries = [record for record in caplog.records if "instances in" in record.getMessage()]
        assert summaries
        assert all(record.name == "ICPi.theorems.CampaignRunner" for record in summaries)

    def test_parallel_campaign_matches_serial(self, tmp_path):
        checks = [TheoremId.THM_C_MINIMAL, TheoremId.THM_D_MAXIMAL]
        corpus_filter = CorpusFilter(8, ("cyclic", "symmetric"))
        serial = run_campaign(corpus_filter, checks, jobs=1)
        parallel = run_campaign(corpus_filter, checks, jobs=2, path_logs=tmp_path / "logs")
        assert parallel.groups == serial.groups
        assert parallel.tallies == serial.tallies
        without_timing = [{k: v for k, v in r.items() if k != 'elapsed'} for r in serial.to_dict()['reports']]
        assert [{k: v for k, v in r.items() if k != 'elapsed'} for r in parallel.to_dict()['reports']] == without_timing
        assert len(list((tmp_path / "logs").glob("log_file_*.log"))) == 2

    def test_empty_corpus(self):
        runner = CampaignRunner(CorpusFilter(1, ("dihedral",)), [TheoremId.THM_A], jobs=1)
        with pytest.raises(ConfigurationError):
            runner.run()

    def test_no_theorem(self):
        with pytest.raises(ConfigurationError):
            CampaignRunner(CorpusFilter(8), [])

    def test_cache_is_reused(self, tmp_path):
        specs = [builtin_spec("Sym(3)"), builtin_spec("Dih(8)")]
        cache = ResultCache(tmp_path, "test")
        first = CampaignRunner(CorpusFilter(), [TheoremId.THM_D_MAXIMAL], jobs=1, cache=cache, specs=specs).run()
        assert cache.stats() == {'hits': 0, 'misses': 2}
        second = CampaignRunner(CorpusFilter(), [TheoremId.THM_D_MAXIMAL], jobs=1, cache=cache, specs=specs).run()
        assert cache.stats() == {'hits': 2, 'misses': 2}
        assert second.to_dict()['reports'] == first.to_dict()['reports']

    def test_cache_keeps_groups_with_equal_elements_apart(self, tmp_path):
        # Cyc(2) and Sym(2) are both generated by (1,2)
        assert builtin_group("Cyc(2)") == builtin_group("Sym(2)")
        cache = ResultCache(tmp_path, "test")
        cold = run_campaign(CorpusFilter(2), [TheoremId.THM_C_MINIMAL], jobs=1, cache=cache)
        warm = run_campaign(CorpusFilter(2), [TheoremId.THM_C_MINIMAL], jobs=1, cache=cache)
        assert cache.stats()['hits'] == len(cold.groups)
        names = [report.instance.group_name for report in cold.reports]
        assert sorted(set(names)) == ["Cyc(2)", "Sym(2)"]
        assert [report.instance.group_name for report in warm.reports] == names
        assert warm.to_dict()['reports'] == cold.to_dict()['reports']
