#!/usr/bin/env python3
# -*- coding: utf-8 -*-

"""Command-line front end of ICPi.

Commands:
    info         order, prime set, normal lattice, chief pairs and the
                 characteristic subgroups of one group.
    check        one subgroup embedding property of ``H`` in ``G``.
    verify       one theorem or lemma instance.
    campaign     every selected theorem over a corpus, with optional suites.
    corpus-list  the built-in groups selected by a filter.

Exit codes: 0 clean, 1 counterexample found, 2 usage or configuration error.
"""

import argparse
import json
import logging
import sys
from pathlib import Path
from typing import Dict, List, Optional, Sequence, TextIO

from tabulate import tabulate

from .characteristic.hypercenter import hypercenter_pu, hypercenter_u
from .characteristic.primes import PrimeSet
from .characteristic.radicals import f_p_star, f_star, fitting, o_p, o_p_prime
from .constructions.corpus import CorpusFilter, build_group, builtin_spec, filtered_corpus
from .constructions.group_file import find_spec, load_group_file
from .constructions.group_spec import GroupSpec
from .constructions.labels import structure_label
from .errors import ConfigurationError, ICPiError
from .lattice.chief_factors import chief_factor_pairs
from .lattice.normal_subgroups import normal_subgroups
from .perm.group import Group
from .perm.permutation import parse_cycles
from .properties.classical import check_classical
from .properties.pi_property import SECTIONS, ic_pi_property, pi_property
from .properties.report import PropertyKind, PropertyReport
from .settings import ENGINE_VERSION, params
from .theorems.CampaignRunner import CampaignRunner
from .theorems.evaluate import check_by_id, reproduce
from .theorems.instances import INTEGER_PARAMETERS, TheoremId, TheoremReport, Verdict
from .theorems.strategies import InstanceStrategy
from .theorems.suites import SUITES
from .utils.cache import ENGINE_COUNTERS, ResultCache
from .utils.json_utils import dumps_json, load_json, save_json, write_text_atomic
from .utils.write_campaign_csv import campaign_table, write_campaign_csv

logger = logging.getLogger(__package__)

EXIT_CLEAN = 0
EXIT_COUNTEREXAMPLE = 1
EXIT_USAGE = 2

CAMPAIGN_REPORT_FILE = "campaign_report.json"


class _Parser(argparse.ArgumentParser):
    """Argument parser that raises instead of exiting, so usage errors map to exit code 2."""

    def error(self, message: str) -> None:
        raise ConfigurationError(message)


def _positive_int(text: str) -> int:
    try:
        value = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{text!r} is not an integer") from None
    if value <= 0:
        raise argparse.ArgumentTypeError(f"{text!r} must be positive")
    return value


def build_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument("--settings", type=Path, help="JSON settings file (limits, campaign, cache, checks)")
    common.add_argument("--subgroup-bound", type=_positive_int, help="largest order with full subgroup enumeration")
    common.add_argument("--format", choices=("text", "structured"), default="text", help="output format")
    common.add_argument("--log-level", default="WARNING",
                        choices=("DEBUG", "INFO", "WARNING", "ERROR", "CRITICAL"), help="package log level")
    common.add_argument("--output", type=Path, help="also write the structured output to this file")

    source = argparse.ArgumentParser(add_help=False)
    source.add_argument("--group", required=True, help="built-in group name, or a name in --group-file")
    source.add_argument("--group-file", type=Path, help="group file with one JSON object per line")

    parser = _Parser(prog="icpi", description="Pi-property and IC-Pi-property engine for finite permutation groups.")
    parser.add_argument("--version", action="version", version=f"%(prog)s {ENGINE_VERSION}")
    commands = parser.add_subparsers(dest="command", required=True, parser_class=_Parser)

    commands.add_parser("info", parents=[common, source], help="characteristic subgroups of a group")

    check = commands.add_parser("check", parents=[common, source], help="one embedding property of a subgroup")
    check.add_argument("--property", required=True, help="pi, ic-pi, or a classical property name")
    check.add_argument("--subgroup", action="append", default=[], metavar="CYCLES",
                       help="generator of H in cycle notation; repeat for more generators")
    check.add_argument("--x-subgroup", action="append", default=[], metavar="CYCLES",
                       help="generator of X for x-permutable (default: the Fitting subgroup)")
    check.add_argument("--section", choices=SECTIONS, default="product", help="section of the Pi-property")

    verify = commands.add_parser("verify", parents=[common], help="one theorem or lemma instance")
    verify.add_argument("--group", help="built-in group name, or a name in --group-file")
    verify.add_argument("--group-file", type=Path, help="group file with one JSON object per line")
    verify.add_argument("--theorem", help="theorem id, e.g. thm_C_minimal")
    verify.add_argument("--param", action="append", default=[], metavar="NAME=VALUE",
                        help="p=3, d=4, or a subgroup N=\"(1,2,3);(1,2)\" with ';' between generators")
    verify.add_argument("--from-report", type=Path, help="re-run the instance of a saved theorem report")

    campaign = commands.add_parser("campaign", parents=[common], help="theorem checks over a corpus")
    campaign.add_argument("--theorems", "--theorem", nargs="+", default=["all"], help="theorem ids, or all")
    campaign.add_argument("--corpus-max-order", type=_positive_int, help="largest order of corpus groups")
    campaign.add_argument("--families", nargs="+", help="family allowlist, e.g. symmetric dihedral")
    campaign.add_argument("--group-file", type=Path, help="check the groups of this file instead of the corpus")
    campaign.add_argument("--jobs", type=_positive_int, help="parallel group tasks")
    campaign.add_argument("--suites", nargs="*", default=[], help=f"suites to run: {', '.join(SUITES)}, or all")
    campaign.add_argument("--cache-dir", type=Path, help="result cache directory")
    campaign.add_argument("--no-cache", action="store_true", help="do not read or write the result cache")
    campaign.add_argument("--csv", type=Path, help="write the per-theorem tallies to this CSV file")
    campaign.add_argument("--path-logs", type=Path,
                          help=f"directory of the worker log files, and of {CAMPAIGN_REPORT_FILE} without --output")

    corpus_list = commands.add_parser("corpus-list", parents=[common], help="list the built-in corpus")
    corpus_list.add_argument("--corpus-max-order", type=_positive_int, help="largest order of corpus groups")
    corpus_list.add_argument("--families", nargs="+", help="family allowlist")
    return parser


# Argument resolution

def _configure(args: argparse.Namespace) -> None:
    logging.getLogger(__package__).setLevel(args.log_level)
    if args.settings is not None:
        params.init_from_json(args.settings)
    if args.subgroup_bound is not None:
        params.limits.init_from_dict({'subgroup_bound': args.subgroup_bound})


def _group_spec(name: Optional[str], group_file: Optional[Path]) -> GroupSpec:
    if not name:
        raise ConfigurationError("--group is required")
    if group_file is not None:
        return find_spec(load_group_file(group_file), name)
    return builtin_spec(name)


def _subgroup(G: Group, texts: Sequence[str]) -> Group:
    """Subgroup of ``G`` generated by cycle-notation strings, validated against ``G``."""
    return G.subgroup(parse_cycles(text, G.degree) for text in texts)


def _theorem_parameters(G: Group, pairs: Sequence[str]) -> Dict:
    parameters = {}
    for pair in pairs:
        name, sep, value = pair.partition('=')
        name = name.strip()
        if not sep or not name:
            raise ConfigurationError(f"parameter {pair!r} is not NAME=VALUE")
        if name in INTEGER_PARAMETERS:
            try:
                parameters[name] = int(value)
            except ValueError:
                raise ConfigurationError(f"parameter {name} must be an integer, got {value!r}") from None
        else:
            parameters[name] = _subgroup(G, [t for t in value.split(';') if t.strip()])
    return parameters


def _corpus_filter(max_order: Optional[int], families: Optional[List[str]]) -> CorpusFilter:
    """Explicit order bound, or the default corpus: the configured bound plus the extra groups."""
    families = tuple(families) if families else None
    if max_order is not None:
        return CorpusFilter(max_order, families)
    return CorpusFilter(params.campaign.max_order, families, tuple(params.campaign.extra_groups))


def _suites(names: Sequence[str]) -> List[str]:
    if 'all' in names:
        return list(SUITES)
    unknown = [name for name in names if name not in SUITES]
    if unknown:
        raise ConfigurationError(f"unknown suites {unknown}, expected some of {list(SUITES)}")
    return list(names)


# Rendering

def _emit(args: argparse.Namespace, data: Dict, text: str, out: TextIO) -> None:
    structured = dumps_json(data)
    out.write(structured if args.format == "structured" else text + "\n")
    if args.output is not None:
        write_text_atomic(args.output, structured)


def _subgroup_record(H: Group) -> Dict:
    return {'order': H.order, 'label': structure_label(H), 'generators': H.cycle_strings()}


def _info(G: Group, name: str) -> Dict:
    pairs = chief_factor_pairs(G)
    primes = PrimeSet.of_group(G)
    return {
        'group': name,
        'order': G.order,
        'degree': G.degree,
        'primes': list(primes),
        'normal_subgroups': [_subgroup_record(N) for N in normal_subgroups(G)],
        'chief_pairs': [{**pair.to_dict(), 'K_label': structure_label(pair.K), 'L_label': structure_label(pair.L)}
                        for pair in pairs],
        'Z_U': _subgroup_record(hypercenter_u(G)),
        'F': _subgroup_record(fitting(G)),
        'F*': _subgroup_record(f_star(G)),
        'per_prime': [{
            'p': p,
            'Z_pU': _subgroup_record(hypercenter_pu(G, p)),
            'O_p': _subgroup_record(o_p(G, p)),
            "O_p'": _subgroup_record(o_p_prime(G, p)),
            'F*_p': _subgroup_record(f_p_star(G, p)),
        } for p in primes],
    }


def _info_text(info: Dict) -> str:
    lines = [
        f"{info['group']}: order {info['order']}, degree {info['degree']}",
        "primes {" + ", ".join(str(p) for p in info['primes']) + "}",
        f"normal subgroups ({len(info['normal_subgroups'])}): "
        + ", ".join(N['label'] for N in info['normal_subgroups']),
        "chief pairs " + " ".join(f"({pair['K_label']},{pair['L_label']})" for pair in info['chief_pairs']),
        f"Z_U = {info['Z_U']['label']}",
        f"F = {info['F']['label']}",
        f"F* = {info['F*']['label']}",
    ]
    rows = [[row['p'], row['Z_pU']['label'], row['O_p']['label'], row["O_p'"]['label'], row['F*_p']['label']]
            for row in info['per_prime']]
    if rows:
        lines.append(tabulate(rows, headers=["p", "Z_pU", "O_p", "O_p'", "F*_p"]))
    return "\n".join(lines)


def _property_text(report: PropertyReport) -> str:
    lines = [f"{report.kind.value}: {'holds' if report.holds else 'fails'}"]
    if 'd_order' in report.details:
        lines.append(f"D-order {report.details['d_order']}")
    if report.pairs_checked:
        lines.append(f"chief pairs checked {report.pairs_checked}")
    if report.witness is not None:
        witness = report.witness.to_dict()
        lines.append("witness " + ", ".join(f"{key}={value}" for key, value in witness.items() if value not in ("", [])))
    return "\n".join(lines)


def _theorem_text(report: TheoremReport) -> str:
    instance = report.instance
    lines = [
        f"{instance.theorem_id.value} on {instance.group_name}: {report.verdict.value}",
        f"hypothesis {report.hypothesis_status.value}, conclusion {report.conclusion_status.value}",
    ]
    if report.reason:
        lines.append(f"reason: {report.reason}")
    for key, value in report.details.items():
        lines.append(f"  {key}: {value}")
    return "\n".join(lines)


def _campaign_text(data: Dict) -> str:
    table = campaign_table(data)
    lines = [
        f"{len(data['groups'])} groups, {len(data['reports'])} instances, {data['runtime']:.1f} s",
        tabulate(table, headers="keys", tablefmt="simple"),
    ]
    for suite in data['suites']:
        lines.append(f"suite {suite['name']}: {suite['checked']} checked, {len(suite['violations'])} violations, "
                     f"{len(suite['skipped'])} skipped")
    if data['skipped_enumerations']:
        lines.append(f"skipped enumerations: {', '.join(data['skipped_enumerations'])}")
    for error in data['errors']:
        lines.append(f"ERROR {error}")
    return "\n".join(lines)


# Commands

def _run_info(args: argparse.Namespace, out: TextIO) -> int:
    spec = _group_spec(args.group, args.group_file)
    info = _info(build_group(spec), spec.name)
    _emit(args, info, _info_text(info), out)
    return EXIT_CLEAN


def _run_check(args: argparse.Namespace, out: TextIO) -> int:
    try:
        kind = PropertyKind.parse(args.property)
    except ValueError:
        raise ConfigurationError(f"unknown property {args.property!r}, "
                                 f"expected one of {[k.value for k in PropertyKind]}") from None
    G = build_group(_group_spec(args.group, args.group_file))
    H = _subgroup(G, args.subgroup)
    if kind is PropertyKind.PI:
        report = pi_property(G, H, args.section)
    elif kind is PropertyKind.IC_PI:
        report = ic_pi_property(G, H, args.section)
    else:
        X = _subgroup(G, args.x_subgroup) if args.x_subgroup else fitting(G)
        report = check_classical(G, H, kind, X=X if kind is PropertyKind.X_PERMUTABLE else None)
    _emit(args, report.to_dict(), _property_text(report), out)
    return EXIT_CLEAN


def _run_verify(args: argparse.Namespace, out: TextIO) -> int:
    if args.from_report is not None:
        report = reproduce(load_json(args.from_report))
    else:
        if not args.theorem:
            raise ConfigurationError("--theorem or --from-report is required")
        theorem_id = TheoremId.parse(args.theorem)
        spec = _group_spec(args.group, args.group_file)
        G = build_group(spec)
        report = check_by_id(G, theorem_id, group_name=spec.name, **_theorem_parameters(G, args.param))
    _emit(args, report.to_dict(), _theorem_text(report), out)
    return EXIT_COUNTEREXAMPLE if report.verdict is Verdict.COUNTEREXAMPLE else EXIT_CLEAN


def _run_campaign(args: argparse.Namespace, out: TextIO) -> int:
    checks = TheoremId.parse_list(args.theorems)
    suites = _suites(args.suites)
    specs = load_group_file(args.group_file) if args.group_file is not None else None
    cache = None
    if params.cache.enabled and not args.no_cache:
        directory = args.cache_dir if args.cache_dir is not None else params.cache.resolve_directory()
        cache = ResultCache(directory, ENGINE_VERSION)
    runner = CampaignRunner(_corpus_filter(args.corpus_max_order, args.families), checks,
                            strategy=InstanceStrategy(), jobs=args.jobs, suites=suites, cache=cache,
                            path_logs=args.path_logs, specs=specs)
    report = runner.run()
    data = report.to_dict()
    if cache is not None:
        logger.info("cache %s, engine counters %s", cache.stats(), dict(ENGINE_COUNTERS))
    _emit(args, data, _campaign_text(data), out)
    if args.output is None:
        save_json(runner.path_logs / CAMPAIGN_REPORT_FILE, data)
    if args.csv is not None:
        write_campaign_csv(data, args.csv)
    return EXIT_CLEAN if report.is_clean() else EXIT_COUNTEREXAMPLE


def _run_corpus_list(args: argparse.Namespace, out: TextIO) -> int:
    selected = filtered_corpus(_corpus_filter(args.corpus_max_order, args.families))
    rows = [{'name': spec.name, 'order': G.order, 'degree': spec.degree, 'family': spec.family}
            for spec, G in selected]
    _emit(args, {'groups': rows}, tabulate(rows, headers="keys"), out)
    return EXIT_CLEAN


COMMANDS = {
    'info': _run_info,
    'check': _run_check,
    'verify': _run_verify,
    'campaign': _run_campaign,
    'corpus-list': _run_corpus_list,
}


def run_cli(argv: Optional[Sequence[str]] = None, out: TextIO = sys.stdout, err: TextIO = sys.stderr) -> int:
    """Runs one command and returns its exit code.

    Args:
        argv (Sequence[str], optional): Arguments without the program name; ``sys.argv[1:]`` by default.
        out (TextIO): Stream of the command output.
        err (TextIO): Stream of the one-line diagnostics.

    Returns:
        int: 0 when clean, 1 when a counterexample or suite violation was found,
        2 on usage, configuration or capacity errors.
    """
    try:
        args = build_parser().parse_args(argv)
        _configure(args)
        return COMMANDS[args.command](args, out)
    except ICPiError as e:
        err.write(f"icpi: error: {e}\n")
        return EXIT_USAGE
    except json.JSONDecodeError as e:
        err.write(f"icpi: error: not a JSON document: {e}\n")
        return EXIT_USAGE


def main() -> None:
    sys.exit(run_cli())
