#!/usr/bin/env python3
# -*- coding: utf-8 -*-

import logging
import os
from pathlib import Path
from time import time
from typing import Dict, List, Optional, Sequence, Union

import ray
from tqdm import trange

from ..constructions.corpus import CorpusFilter, build_group, filtered_corpus
from ..constructions.group_spec import GroupSpec
from ..errors import CapacityError, ConfigurationError, InvariantError
from ..settings import ENGINE_VERSION, params
from ..utils.cache import ENGINE_COUNTERS, ResultCache
from .evaluate import check_by_id
from .instances import CampaignReport, TheoremId, Verdict
from .strategies import InstanceStrategy
from .suites import run_suites

logger = logging.getLogger(__name__)


def run_group(spec: GroupSpec, checks: Sequence[str], strategy: Dict, settings: Dict,
              log_file: Optional[Union[Path, str]] = None) -> Dict:
    """Enumerates and checks every instance of ``checks`` on one corpus group.

    Runs in-process or as a ray task. Settings are re-applied so that a worker
    uses the limits of the driver. Failures of one instance are logged and
    recorded, never raised.

    Args:
        spec (GroupSpec): Group to check.
        checks (Sequence[str]): Theorem id values.
        strategy (Dict): :meth:`InstanceStrategy.to_dict` of the campaign strategy.
        settings (Dict): ``limits`` and ``checks`` sections of the driver settings.
        log_file (Union[Path, str], optional): Log file of the worker.

    Returns:
        Dict: ``name``, ``reports``, ``truncated``, ``skipped_enumerations``,
        ``errors`` and ``instances`` (number of instances checked).
    """
    log = logger
    if log_file is not None:
        logging.basicConfig(filename=log_file, level=logging.DEBUG, force=True)
        log = logging.getLogger()
    params.init_from_dict(settings)
    start = time()
    G = build_group(spec)
    enumerator = InstanceStrategy(**strategy)
    result = {'name': spec.name, 'reports': [], 'truncated': {}, 'skipped_enumerations': [], 'errors': [],
              'instances': 0}
    for value in checks:
        theorem_id = TheoremId(value)
        try:
            parameter_sets, truncated = enumerator.instances(G, theorem_id)
        except CapacityError as e:
            log.error(f"{spec.name}: instances of {value} not enumerated: {e}")
            result['skipped_enumerations'].append(f"{spec.name}/{value}")
            continue
        if truncated:
            result['truncated'][value] = truncated
        for parameters in parameter_sets:
            try:
                report = check_by_id(G, theorem_id, group_name=spec.name, **parameters)
            except InvariantError as e:
                log.error(f"INTERNAL CHECK FAILED for {value} on {spec.name}: {e}")
                result['errors'].append(f"{spec.name}/{value}: {e}")
                continue
            if report.verdict is Verdict.COUNTEREXAMPLE:
                log.error(f"COUNTEREXAMPLE for {value} on {spec.name}: {report.to_dict()['instance']}")
            result['reports'].append(report)
            result['instances'] += 1
    log.info(f"{spec.name}: {result['instances']} instances in {time() - start:.2f} s")
    return result


class CampaignRunner(object):
    """Runs theorem checks over a corpus of groups and merges the results.

    Each corpus group is one task. With ``jobs > 1`` the tasks run as ray
    tasks, ``jobs`` at a time, and the next group is submitted each time one
    finishes; otherwise they run serially in this process. The report lists
    groups in corpus order whatever the completion order.
    """

    def __init__(
            self,
            corpus_filter: CorpusFilter,
            checks: Sequence[TheoremId],
            strategy: Optional[InstanceStrategy] = None,
            jobs: Optional[int] = None,
            suites: Sequence[str] = (),
            cache: Optional[ResultCache] = None,
            path_logs: Optional[Union[Path, str]] = None,
            specs: Optional[Sequence[GroupSpec]] = None
    ) -> None:
        """
        Args:
            corpus_filter (CorpusFilter): Selection of built-in groups.
            checks (Sequence[TheoremId]): Theorems and lemmas to check.
            strategy (InstanceStrategy, optional): Instance enumeration, from the settings by default.
            jobs (int, optional): Parallel tasks; ``params.campaign.jobs`` by default.
            suites (Sequence[str]): Verification suites to run after the checks.
            cache (ResultCache, optional): Cache of per-group results.
            path_logs (Union[Path, str], optional): Directory of the worker log files.
            specs (Sequence[GroupSpec], optional): Groups to use instead of the filtered corpus.
        """
        if not checks:
            raise ConfigurationError("no theorem selected")
        self.corpus_filter = corpus_filter
        self.checks = list(checks)
        self.strategy = strategy or InstanceStrategy()
        self.jobs = jobs if jobs is not None else params.campaign.jobs
        self.suites = list(suites)
        self.cache = cache
        self.path_logs = Path(path_logs) if path_logs is not None else Path.cwd() / 'icpi_campaign_logs'
        self._specs = list(specs) if specs is not None else None

    def corpus_specs(self) -> List[GroupSpec]:
        """Specs of the campaign groups.

        Raises:
            ConfigurationError: If no group is selected.
        """
        specs = self._specs if self._specs is not None else [spec for spec, _ in filtered_corpus(self.corpus_filter)]
        if not specs:
            raise ConfigurationError("empty corpus")
        return specs

    def __settings(self) -> Dict:
        return {'limits': params.limits.to_dict(), 'checks': {'self_check': params.checks.self_check}}

    def __cache_key(self, spec: GroupSpec) -> str:
        # reports carry the group name, so equal element sets under two names get two entries
        parameters = {'group': spec.name, 'checks': [t.value for t in self.checks],
                      'strategy': self.strategy.to_dict(), 'settings': self.__settings()}
        return self.cache.key(build_group(spec).fingerprint, 'campaign_group', parameters)

    def __run_serial(self, specs: List[GroupSpec], settings: Dict) -> Dict[int, Dict]:
        checks = [t.value for t in self.checks]
        return {i: run_group(spec, checks, self.strategy.to_dict(), settings) for i, spec in enumerate(specs)}

    def __run_parallel(self, specs: List[GroupSpec], settings: Dict) -> Dict[int, Dict]:
        checks = [t.value for t in self.checks]
        strategy = self.strategy.to_dict()
        n_groups = len(specs)
        n_batch = min(self.jobs, n_groups)

        os.makedirs(self.path_logs, 0o777, True)
        log_files = [self.path_logs / ('log_file_' + str(i) + '.log') for i in range(n_batch)]

        if ray.is_initialized():
            ray.shutdown()
        ray.init(num_cpus=n_batch, include_dashboard=False, log_to_driver=False)
        remote_group = ray.remote(run_group)

        # Distribute the first tasks to all workers
        index_of = {}
        ids = []
        for i in range(n_batch):
            ref = remote_group.remote(specs[i], checks, strategy, settings, log_files[i])
            index_of[ref] = i
            ids.append(ref)

        # Distribute the remaining tasks
        results = {}
        nb_job_left = n_groups - n_batch
        try:
            for _ in trange(n_groups):
                ready, not_ready = ray.wait(ids, num_returns=1)
                ids = not_ready
                i = index_of[ready[0]]
                results[i] = ray.get(ready)[0]
                if nb_job_left > 0:
                    idx = n_groups - nb_job_left
                    ref = remote_group.remote(specs[idx], checks, strategy, settings, log_files[i % n_batch])
                    index_of[ref] = idx
                    ids.append(ref)
                    nb_job_left -= 1
        finally:
            ray.shutdown()
        return results

    def run(self) -> CampaignReport:
        """Runs every check on every corpus group, then the selected suites.

        Returns:
            CampaignReport: Reports in (group, theorem, instance) order.

        Raises:
            ConfigurationError: If the corpus is empty.
        """
        start = time()
        specs = self.corpus_specs()
        settings = self.__settings()

        results: Dict[int, Dict] = {}
        pending = []
        for i, spec in enumerate(specs):
            cached = None
            if self.cache is not None:
                cached = self.cache.load(self.__cache_key(spec))
            if cached is not None:
                self.cache.hits += 1
                results[i] = cached
            else:
                pending.append(i)
        logger.info("campaign over %d groups, %d cached", len(specs), len(specs) - len(pending))

        if pending:
            todo = [specs[i] for i in pending]
            if self.jobs <= 1 or len(todo) == 1:
                computed = self.__run_serial(todo, settings)
            else:
                computed = self.__run_parallel(todo, settings)
            for j, i in enumerate(pending):
                result = computed[j]
                results[i] = result
                ENGINE_COUNTERS['group_tasks'] += 1
                ENGINE_COUNTERS['instances_checked'] += result['instances']
                if self.cache is not None:
                    self.cache.misses += 1
                    if not result['errors']:
                        self.cache.store(self.__cache_key(specs[i]), result)

        report = CampaignReport(
            corpus_filter=self.corpus_filter.to_dict(),
            checks=self.checks,
            groups=[spec.name for spec in specs],
            reports=[],
            engine_version=ENGINE_VERSION,
        )
        for i in range(len(specs)):
            result = results[i]
            report.reports.extend(result['reports'])
            for value, n in result['truncated'].items():
                report.truncated[value] = report.truncated.get(value, 0) + n
            report.skipped_enumerations.extend(result['skipped_enumerations'])
            report.errors.extend(result['errors'])

        if self.suites:
            groups = [(spec.name, build_group(spec)) for spec in specs]
            report.suites = [suite.to_dict() for suite in run_suites(self.suites, groups)]

        report.runtime = time() - start
        if report.counterexamples:
            logger.error("%d counterexamples found", len(report.counterexamples))
        return report


def run_campaign(corpus_filter: CorpusFilter, checks: Sequence[TheoremId],
                 instance_strategy: Optional[InstanceStrategy] = None, **kwargs) -> CampaignReport:
    """Runs ``checks`` over the groups selected by ``corpus_filter``.

    Keyword arguments are passed to :class:`CampaignRunner`.

    Raises:
        ConfigurationError: If the corpus or the check list is empty.
    """
    return CampaignRunner(corpus_filter, checks, instance_strategy, **kwargs).run()
