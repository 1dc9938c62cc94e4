"""
hibilevel: command-line front end.

    hibilevel analyze --poset diamond.json --json
    hibilevel schubert --m 2 --n 4 --gamma 1,2
    hibilevel sweep --m 2 --n 5 --all-gamma
    hibilevel search-nonlevel --max-n 6
    hibilevel verify-lemma --max-n 5 --trials 200 --seed 7
    hibilevel sagbi-check --m 2 --n 4 --all-gamma --max-deg 3
    hibilevel theorem-scan --max-n 5

Exit codes: 0 success, 1 usage or input error, 2 resource cap, 3 failed mathematical assertion.
"""
import argparse
import sys
from abc import abstractmethod
from pathlib import Path
from typing import Any, List, Optional, Sequence

from colorama import Fore, Style, just_fix_windows_console

from HibiLevelAJM._version import __version__
from HibiLevelAJM.backend import stable_dumps
from HibiLevelAJM.backend.errors import (InvalidInputError, MathematicalAssertionError, PreconditionError,
                                         ResourceCapExceeded)
from HibiLevelAJM.backend.meta import ABCSubcommand
from HibiLevelAJM.helpers.bases import BaseComputation
from HibiLevelAJM.helpers.hibi import HibiRing, lemma_scan, search_nonlevel, theorem_scan
from HibiLevelAJM.helpers.poset_core import (EXTENSION_CAP_DEFAULT, IDEAL_CAP_DEFAULT, POSET_LIMIT_DEFAULT,
                                             load_poset)
from HibiLevelAJM.helpers.sagbi import SagbiVerifier
from HibiLevelAJM.helpers.schubert import SchubertCycle, SchubertSpec, all_gammas

EXIT_OK = 0
EXIT_INPUT = 1
EXIT_CAP = 2
EXIT_ASSERTION = 3


def _int_list(text: str) -> List[int]:
    try:
        return [int(tok) for tok in text.split(',') if tok.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"expected comma-separated integers, got {text!r}") from None


def _paint(text: str, colour: str, stream=None) -> str:
    stream = stream or sys.stdout
    if hasattr(stream, 'isatty') and stream.isatty():
        return f"{colour}{text}{Style.RESET_ALL}"
    return text


class HibiArgumentParser(argparse.ArgumentParser):
    """ArgumentParser whose usage errors exit with the input-error code and an ERROR: prefix."""

    def error(self, message):
        self.print_usage(sys.stderr)
        self.exit(EXIT_INPUT, f"ERROR: {message}\n")


class BaseSubcommand(BaseComputation, metaclass=ABCSubcommand):
    """
    Base of the CLI subcommands. Concrete subclasses define COMMAND_NAME and COMMAND_HELP
    (checked by ABCSubcommand when the class is created), add their own flags in
    add_arguments() and return a report object from run().
    """
    COMMAND_NAME = None
    COMMAND_HELP = None

    _CAP_NAMES = ('ideal_cap', 'count_cap', 'enumeration_cap', 'extension_cap', 'multichain_cap', 'poset_limit')
    _DEFAULT_IDEAL_CAP = IDEAL_CAP_DEFAULT
    _DEFAULT_COUNT_CAP = HibiRing._DEFAULT_COUNT_CAP
    _DEFAULT_ENUMERATION_CAP = HibiRing._DEFAULT_ENUMERATION_CAP
    _DEFAULT_EXTENSION_CAP = EXTENSION_CAP_DEFAULT
    _DEFAULT_MULTICHAIN_CAP = SagbiVerifier._DEFAULT_MULTICHAIN_CAP
    _DEFAULT_POSET_LIMIT = POSET_LIMIT_DEFAULT

    def __init__(self, args: argparse.Namespace, **kwargs):
        caps = {name: getattr(args, name, None) for name in self._CAP_NAMES}
        super().__init__(basic_config_level=args.log_level, **caps, **kwargs)
        self.args = args

    @classmethod
    def add_arguments(cls, parser: argparse.ArgumentParser):
        pass

    @abstractmethod
    def run(self) -> Any:
        raise NotImplementedError

    def render(self, payload: Any) -> str:
        return stable_dumps(payload)

    @staticmethod
    def _level_word(is_level: bool) -> str:
        return _paint('level', Fore.GREEN) if is_level else _paint('NOT level', Fore.YELLOW)

    @staticmethod
    def _add_spec_arguments(parser: argparse.ArgumentParser, allow_all: bool = False):
        parser.add_argument('--m', type=int, required=True, help="number of rows (the m of G(m, n))")
        parser.add_argument('--n', type=int, required=True, help="number of columns")
        group = parser.add_mutually_exclusive_group(required=not allow_all)
        group.add_argument('--gamma', type=_int_list, help="the index gamma = b_1,...,b_m")
        group.add_argument('--a', type=_int_list, help="the geometric index a_1,...,a_m")
        if allow_all:
            group.add_argument('--all-gamma', action='store_true', help="every gamma of G(m, n) (default)")

    def _specs(self) -> List[SchubertSpec]:
        args = self.args
        if getattr(args, 'gamma', None) is not None:
            return [SchubertSpec.from_gamma(args.m, args.n, args.gamma)]
        if getattr(args, 'a', None) is not None:
            return [SchubertSpec.from_a(args.m, args.n, args.a)]
        return all_gammas(args.m, args.n)

    @staticmethod
    def _report_lines(report) -> List[str]:
        return [f"  rank(P^) = {report.rank_phat}, dim = {report.dim}",
                f"  h-vector = {list(report.h_vector)}",
                f"  generator degrees = {list(report.generator_degrees)} (type {report.cm_type})",
                f"  filter purity = {report.filter_purity}, ideal purity = {report.ideal_purity}",
                f"  scanned up to degree {report.generator_cap_used}, stabilized = {report.stabilized}"]


class AnalyzeCommand(BaseSubcommand):
    COMMAND_NAME = 'analyze'
    COMMAND_HELP = "invariants and levelness of the Hibi ring of a poset file"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--poset', type=Path, required=True, help="poset file (JSON or text form)")
        parser.add_argument('--cap', type=int, default=None, help="highest degree scanned for canonical generators")

    def run(self):
        poset = load_poset(self.args.poset)
        return HibiRing(poset, generator_cap=self.args.cap, **self.cap_kwargs).analyze()

    def render(self, report):
        return '\n'.join([f"{self.args.poset}: {self._level_word(report.is_level)}"] + self._report_lines(report))


class SchubertCommand(BaseSubcommand):
    COMMAND_NAME = 'schubert'
    COMMAND_HELP = "levelness pipeline for one Schubert cycle"

    @classmethod
    def add_arguments(cls, parser):
        cls._add_spec_arguments(parser)

    def run(self):
        return SchubertCycle(self._specs()[0], **self.cap_kwargs).check_level()

    def render(self, report):
        spec = report.spec
        lines = [f"{spec} (a = {list(spec.a)}): {self._level_word(report.is_level)}",
                 f"  |Gamma(X; gamma)| = {report.lattice_size}, "
                 f"|P| = {len(report.join_irreducibles['elements'])}",
                 f"  N x N cells = {sorted(report.embedding.image)}"]
        return '\n'.join(lines + self._report_lines(report.hibi))


class SweepCommand(BaseSubcommand):
    COMMAND_NAME = 'sweep'
    COMMAND_HELP = "levelness pipeline for every gamma of G(m, n)"

    @classmethod
    def add_arguments(cls, parser):
        cls._add_spec_arguments(parser, allow_all=True)

    def run(self):
        return [SchubertCycle(spec, **self.cap_kwargs).check_level() for spec in self._specs()]

    def render(self, reports):
        lines = [f"{'gamma':<14}{'a':<14}{'|Gamma|':>8}{'|P|':>5}{'type':>6}  level"]
        for report in reports:
            lines.append(f"{str(report.spec.gamma):<14}{str(list(report.spec.a)):<14}{report.lattice_size:>8}"
                         f"{len(report.join_irreducibles['elements']):>5}{report.hibi.cm_type:>6}  "
                         f"{self._level_word(report.is_level)}")
        return '\n'.join(lines)


class SearchNonlevelCommand(BaseSubcommand):
    COMMAND_NAME = 'search-nonlevel'
    COMMAND_HELP = "list every small poset whose Hibi ring is not level"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--max-n', type=int, required=True, help="largest poset size scanned")

    def run(self):
        found = search_nonlevel(self.args.max_n, **self.cap_kwargs)
        return {'max_n': self.args.max_n, 'count': len(found),
                'found': [{'poset': poset, 'report': report} for poset, report in found]}

    def render(self, payload):
        lines = [f"{payload['count']} non-level posets on at most {payload['max_n']} elements"]
        for item in payload['found']:
            report = item['report']
            lines.append(f"  {item['poset']!r}: generator degrees {list(report.generator_degrees)}, "
                         f"h = {list(report.h_vector)}")
        return '\n'.join(lines)


class VerifyLemmaCommand(BaseSubcommand):
    COMMAND_NAME = 'verify-lemma'
    COMMAND_HELP = "check the degree-rank(P^) decomposition nu = nu0 + (nu - nu0)"

    @classmethod
    def add_arguments(cls, parser):
        source = parser.add_mutually_exclusive_group(required=True)
        source.add_argument('--poset', type=Path, help="poset file (JSON or text form)")
        source.add_argument('--max-n', type=int, help="check every pure poset up to this size")
        parser.add_argument('--extra', type=int, default=3, help="sweep degrees up to rank(P^) + extra")
        parser.add_argument('--trials', type=int, default=0, help="random maps of higher degree")
        parser.add_argument('--seed', type=int, default=None, help="seed for the random maps")

    def run(self):
        args = self.args
        if args.poset is not None:
            ring = HibiRing(load_poset(args.poset), **self.cap_kwargs)
            return [ring.verify_lemma(extra=args.extra, trials=args.trials, seed=args.seed)]
        return lemma_scan(args.max_n, extra=args.extra, trials=args.trials, seed=args.seed, **self.cap_kwargs)

    def render(self, reports):
        swept = sum(r.exhaustive_checked for r in reports)
        sampled = sum(r.random_checked for r in reports)
        return (f"{len(reports)} posets, {swept} swept and {sampled} random maps, "
                f"{_paint('0 failures', Fore.GREEN)}")


class SagbiCheckCommand(BaseSubcommand):
    COMMAND_NAME = 'sagbi-check'
    COMMAND_HELP = "leading-term and standard-monomial checks for the minors of U_gamma"

    @classmethod
    def add_arguments(cls, parser):
        cls._add_spec_arguments(parser, allow_all=True)
        parser.add_argument('--max-deg', type=int, default=3, help="highest standard-monomial degree")

    def run(self):
        if self.args.max_deg < 0:
            raise PreconditionError("--max-deg must be non-negative")
        return [SagbiVerifier(spec, **self.cap_kwargs).verify(self.args.max_deg) for spec in self._specs()]

    def render(self, reports):
        lines = []
        for report in reports:
            counts = ', '.join(f"H({s.degree})={s.count}" for s in report.scans)
            lines.append(f"{report.spec}: {report.diagonal_checked} diagonals, "
                         f"{report.multiplicative_pairs} pairs, {report.straightening_pairs} straightened; {counts}")
        return '\n'.join(lines)


class TheoremScanCommand(BaseSubcommand):
    COMMAND_NAME = 'theorem-scan'
    COMMAND_HELP = "check the levelness theorem and its dual on every small poset"

    @classmethod
    def add_arguments(cls, parser):
        parser.add_argument('--max-n', type=int, required=True, help="largest poset size scanned")
        parser.add_argument('--skip-descents', action='store_true', help="skip the descent-statistic cross-check")

    def run(self):
        return theorem_scan(self.args.max_n, check_descents=not self.args.skip_descents, **self.cap_kwargs)

    def render(self, summary):
        return '\n'.join([
            f"{summary.scanned} posets on at most {summary.max_n} elements",
            f"  filter-pure {summary.filter_pure}, ideal-pure {summary.ideal_pure}",
            f"  level {summary.level}, non-level {summary.non_level}, not stabilized {summary.not_stabilized}",
            f"  descent cross-checks {summary.descent_checks}",
            _paint(f"{summary.counterexamples} counterexamples", Fore.GREEN)])


SUBCOMMANDS = (AnalyzeCommand, SchubertCommand, SweepCommand, SearchNonlevelCommand,
               VerifyLemmaCommand, SagbiCheckCommand, TheoremScanCommand)


def _common_parser() -> argparse.ArgumentParser:
    common = argparse.ArgumentParser(add_help=False)
    common.add_argument('--json', action='store_true', help="print the report as key-sorted JSON")
    common.add_argument('--out', type=Path, default=None, help="write the report to this file instead")
    common.add_argument('--log-level', default='WARNING',
                        choices=['DEBUG', 'INFO', 'WARNING', 'ERROR', 'CRITICAL'])
    for name in BaseSubcommand._CAP_NAMES:
        common.add_argument(f"--{name.replace('_', '-')}", dest=name, type=int, default=None,
                            help=f"resource cap (default {getattr(BaseSubcommand, '_DEFAULT_' + name.upper())})")
    return common


def build_parser() -> HibiArgumentParser:
    parser = HibiArgumentParser(prog='hibilevel', description="Levelness of Hibi rings and Schubert cycles.")
    parser.add_argument('--version', action='version', version=f"%(prog)s {__version__}")
    sub = parser.add_subparsers(dest='command', required=True, parser_class=HibiArgumentParser)
    common = _common_parser()
    for command in SUBCOMMANDS:
        command_parser = sub.add_parser(command.COMMAND_NAME, help=command.COMMAND_HELP, parents=[common])
        command.add_arguments(command_parser)
        command_parser.set_defaults(command_class=command)
    return parser


def _fail(err: Exception, code: int) -> int:
    print(_paint(f"ERROR: {err}", Fore.RED, sys.stderr), file=sys.stderr)
    return code


def main(argv: Optional[Sequence[str]] = None) -> int:
    just_fix_windows_console()
    args = build_parser().parse_args(argv)
    try:
        command = args.command_class(args)
        payload = command.run()
    except InvalidInputError as e:
        return _fail(e, EXIT_INPUT)
    except ResourceCapExceeded as e:
        return _fail(e, EXIT_CAP)
    except MathematicalAssertionError as e:
        return _fail(e, EXIT_ASSERTION)

    text = stable_dumps(payload) if args.json else command.render(payload)
    if args.out is not None:
        try:
            args.out.parent.mkdir(parents=True, exist_ok=True)
            args.out.write_text(text + '\n', encoding='utf-8')
        except OSError as e:
            return _fail(InvalidInputError(f"cannot write {args.out}: {e}"), EXIT_INPUT)
    else:
        print(text)
    return EXIT_OK


if __name__ == '__main__':
    raise SystemExit(main())
