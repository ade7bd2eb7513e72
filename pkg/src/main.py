"""
hermlcd command line
Constructs cyclic Hermitian LCD codes, checks their parameters and runs ODSM fault detection
"""

import sys
import json
import logging
import argparse
from typing import Optional

from sympy import factorint

from algebra.cosets import coset_table
from algebra.gf import build_field, hermitian_field
from algebra.polyring import Poly, factor_split
from codes.cyclic import (
    CyclicCode,
    bch_lower_bound,
    from_generator,
    is_euclidean_lcd,
    is_hermitian_lcd,
)
from codes.distance import min_distance
from codes import odsm
from generators.base import ConstructionReport
from generators.hop import HopGenerator
from generators.primitive import PrimitiveGenerator
from generators.quaternary import QuaternaryGenerator
from generators.enumeration import enumerate_hlcd
from utils.config import Settings, get_settings
from utils.distributions import Distributions
from utils.errors import HermLcdError, UsageError
from utils.output import ReportWriter

logger = logging.getLogger(__name__)

FAMILY_CHOICES = ('hop', 'g1', 'g2')
SURVEY_COLUMNS = ['n', 'q', 'delta', 'k_formula', 'k_actual', 'bch_bound', 'd_exact', 'hlcd']


def parse_vector(text: Optional[str], name: str) -> Optional[tuple[int, ...]]:
    """'1,0,3' -> (1, 0, 3)"""
    if text is None:
        return None
    text = text.strip()
    if not text:
        return ()
    try:
        return tuple(int(v) for v in text.split(','))
    except ValueError:
        raise UsageError(f"--{name} must be comma-separated integers, got {text!r}")


def parse_range(text: str, name: str) -> range:
    """'a:b' -> a..b inclusive"""
    try:
        a, b = (int(v) for v in text.split(':'))
    except ValueError:
        raise UsageError(f"--{name} must look like a:b, got {text!r}")
    if a > b:
        raise UsageError(f"--{name} is empty: {text!r}")
    return range(a, b + 1)


def field_header(field) -> dict:
    return {'p': field.p, 'k': field.k}


class HermLcdCli:
    """Main orchestrator: parses argv, dispatches, emits one report"""

    def __init__(self):
        self.parser = self._build_parser()
        self.settings: Optional[Settings] = None
        self.writer: Optional[ReportWriter] = None

    def _build_parser(self) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--json', action='store_true', help='emit compact JSON')
        common.add_argument('--out', help='write the report to this file instead of stdout')
        common.add_argument('--budget', type=int, help='enumeration work budget (overrides HERMLCD_BUDGET)')
        common.add_argument('--seed', type=int, help='seed for mask and fault sampling')

        selection = argparse.ArgumentParser(add_help=False)
        selection.add_argument('--family', choices=FAMILY_CHOICES)
        selection.add_argument('--q', type=int, default=2)
        selection.add_argument('--t', type=int)
        selection.add_argument('--m', type=int)
        selection.add_argument('--delta', type=int)
        selection.add_argument('--e', type=int, default=1)
        selection.add_argument('--generator', help='JSON file {"p","k","n","generator"}')

        parser = argparse.ArgumentParser(prog='hermlcd', description=__doc__.strip().splitlines()[0])
        sub = parser.add_subparsers(dest='command', required=True)

        cosets = sub.add_parser('cosets', parents=[common], help='cyclotomic cosets of Z_n')
        cosets.add_argument('--n', type=int, required=True)
        cosets.add_argument('--base-q', type=int, required=True)

        factor = sub.add_parser('factor', parents=[common], help='split x^n - 1 into e_i and f_j f_jbar* factors')
        factor.add_argument('--n', type=int, required=True)
        factor.add_argument('--q', type=int, required=True)

        construct = sub.add_parser('construct', parents=[common], help='build one code of a family')
        construct.add_argument('--family', choices=FAMILY_CHOICES, required=True)
        construct.add_argument('--q', type=int, default=2)
        construct.add_argument('--t', type=int)
        construct.add_argument('--m', type=int)
        construct.add_argument('--delta', type=int)
        construct.add_argument('--e', type=int, default=1)
        construct.add_argument('--distance', choices=('auto', 'off'), default='off')

        enumerate_ = sub.add_parser('enumerate', parents=[common], help='every cyclic Hermitian LCD code of length n')
        enumerate_.add_argument('--n', type=int, required=True)
        enumerate_.add_argument('--q', type=int, required=True)
        enumerate_.add_argument('--list', action='store_true', help='include every code')

        survey = sub.add_parser('survey', parents=[common], help='CSV table of a family over a parameter range')
        survey.add_argument('--family', choices=FAMILY_CHOICES, required=True)
        survey.add_argument('--q', type=int, default=2)
        survey.add_argument('--m', type=int)
        survey.add_argument('--e', type=int, default=1)
        survey.add_argument('--delta-range')
        survey.add_argument('--t-range')
        survey.add_argument('--distance', choices=('auto', 'off'), default='off')

        code = sub.add_parser('code', help='inspect a single code')
        code_sub = code.add_subparsers(dest='action', required=True)
        describe = code_sub.add_parser('describe', parents=[common, selection])
        describe.add_argument('--distance', choices=('auto', 'off'), default='auto')

        odsm_parser = sub.add_parser('odsm', help='orthogonal direct sum masking')
        odsm_sub = odsm_parser.add_subparsers(dest='action', required=True)
        odsm_sub.add_parser('setup', parents=[common, selection])
        mask = odsm_sub.add_parser('mask', parents=[common, selection])
        mask.add_argument('--x')
        mask.add_argument('--y')
        check = odsm_sub.add_parser('check', parents=[common, selection])
        check.add_argument('--z', required=True)
        check.add_argument('--epsilon', required=True)
        check.add_argument('--y', required=True)
        sweep = odsm_sub.add_parser('sweep', parents=[common, selection])
        sweep.add_argument('--max-weight', type=int, required=True)
        sweep.add_argument('--min-weight', type=int, default=1)
        sweep.add_argument('--samples', type=int, default=10_000)
        return parser

    def run(self, argv: Optional[list[str]] = None) -> int:
        """Execute one command; returns the process exit status"""
        try:
            args = self.parser.parse_args(argv)
        except SystemExit as exc:
            return 0 if exc.code in (0, None) else 2

        try:
            self.settings = get_settings().with_overrides(budget=args.budget, seed=args.seed)
            logging.basicConfig(
                level=getattr(logging, self.settings.log_level),
                format='%(asctime)s - %(name)s - %(levelname)s - %(message)s'
            )
            mode = 'json' if args.json else ('csv' if args.command == 'survey' else 'human')
            self.writer = ReportWriter(mode, args.out)
            logger.info(f"Running {args.command} {getattr(args, 'action', '') or ''}".rstrip())
            handler = getattr(self, f"_cmd_{args.command}")
            handler(args)
        except UsageError as exc:
            self._emit_error(exc)
            return 2
        except HermLcdError as exc:
            self._emit_error(exc)
            return 1
        finally:
            if self.writer is not None:
                self.writer.close()
        return 0

    def _emit_error(self, exc: HermLcdError):
        logger.error(f"{exc.code}: {exc}")
        sys.stderr.write(json.dumps(exc.as_dict(), separators=(',', ':'), default=str) + '\n')

    # Code selection

    def _family_report(self, args, distance: str = 'off') -> ConstructionReport:
        budget = self.settings.budget
        if args.family == 'hop':
            if args.t is None:
                raise UsageError("--family hop needs --t")
            return HopGenerator(distance, budget).generate(args.t)
        if args.m is None or args.delta is None:
            raise UsageError(f"--family {args.family} needs --m and --delta")
        if args.family == 'g1':
            return PrimitiveGenerator(distance, budget).generate(args.q, args.m, args.delta, args.e)
        return QuaternaryGenerator(distance, budget).generate(args.m, args.delta)

    def _select_code(self, args) -> CyclicCode:
        if args.generator:
            if args.family:
                raise UsageError("give either --family or --generator, not both")
            return self._load_generator(args.generator)
        if not args.family:
            raise UsageError("select a code with --family or --generator")
        return self._family_report(args).code

    @staticmethod
    def _load_generator(path: str) -> CyclicCode:
        try:
            with open(path, 'r') as f:
                data = json.load(f)
            field = build_field(int(data['p']), int(data['k']))
            n = int(data['n'])
            coeffs = tuple(int(c) for c in data['generator'])
        except (OSError, ValueError, KeyError, TypeError) as exc:
            raise UsageError(f"cannot read generator file {path}: {exc}")
        return from_generator(field, n, Poly(field, coeffs))

    def _odsm_instance(self, args) -> odsm.OdsmInstance:
        return odsm.setup(self._select_code(args))

    # Subcommands

    def _cmd_cosets(self, args):
        table = coset_table(args.n, args.base_q)
        report = {}
        factors = factorint(args.base_q)
        if len(factors) == 1:
            (p, k), = factors.items()
            report['field'] = {'p': int(p), 'k': int(k)}
        report.update({
            'n': table.n,
            'Q': table.Q,
            'm': table.m,
            'cosets': [{'leader': s, 'members': list(table.coset_of[s])} for s in table.leaders],
        })
        lines = [f"n={table.n} Q={table.Q} m={table.m} ({len(table.leaders)} cosets)"]
        lines += [f"C_{s} = {{{', '.join(map(str, table.coset_of[s]))}}}" for s in table.leaders]
        self.writer.write(report, '\n'.join(lines))

    def _cmd_factor(self, args):
        field = hermitian_field(args.q)
        split = factor_split(args.n, field)
        report = {
            'field': field_header(field),
            'n': split.n,
            'q': args.q,
            'u': split.u,
            'v': split.v,
            'self_conjugate': [{'leader': s, 'coeffs': list(f.coeffs)}
                               for s, f in zip(split.self_leaders, split.self_conjugate)],
            'paired': [{'leaders': list(leaders), 'f': list(f.coeffs), 'f_conj_rec': list(g.coeffs)}
                       for leaders, (f, g) in zip(split.pair_leaders, split.paired)],
        }
        lines = [f"x^{split.n} - 1 over {field}: u={split.u}, v={split.v}, "
                 f"{2 ** (split.u + split.v)} Hermitian LCD codes"]
        lines += [f"e (C_{s}): {f}" for s, f in zip(split.self_leaders, split.self_conjugate)]
        lines += [f"f (C_{a}, C_{b}): {f} | {g}"
                  for (a, b), (f, g) in zip(split.pair_leaders, split.paired)]
        self.writer.write(report, '\n'.join(lines))

    def _cmd_construct(self, args):
        report = self._family_report(args, args.distance)
        self.writer.write(report.as_dict())

    def _cmd_enumerate(self, args):
        field = hermitian_field(args.q)
        split = factor_split(args.n, field)
        count, codes = enumerate_hlcd(args.n, field)
        report = {
            'field': field_header(field),
            'n': args.n,
            'q': args.q,
            'u': split.u,
            'v': split.v,
            'count': count,
        }
        if args.list:
            report['codes'] = [{'k': c.k, 'generator': list(c.gen.coeffs),
                                'defining_set': list(c.defining_set.elems)} for c in codes]
        self.writer.write(report)

    def _cmd_survey(self, args):
        reports = []
        if args.family == 'hop':
            if not args.t_range:
                raise UsageError("--family hop surveys over --t-range a:b")
            gen = HopGenerator(args.distance, self.settings.budget)
            for t in parse_range(args.t_range, 't-range'):
                logger.info(f"Survey step t={t}")
                reports.append(gen.generate(t))
        else:
            if not args.delta_range or args.m is None:
                raise UsageError(f"--family {args.family} surveys need --m and --delta-range a:b")
            for delta in parse_range(args.delta_range, 'delta-range'):
                logger.info(f"Survey step delta={delta}")
                args.delta = delta
                reports.append(self._family_report(args, args.distance))
        rows = [r.as_row() for r in reports]
        if self.writer.mode == 'json':
            field = reports[0].code.field
            self.writer.write_json({'field': field_header(field), 'family': reports[0].params.family,
                                    'rows': rows})
        else:
            self.writer.write_rows(rows, SURVEY_COLUMNS)

    def _cmd_code(self, args):
        C = self._select_code(args)
        report = {
            'field': field_header(C.field),
            'n': C.n,
            'k': C.k,
            'q': C.q,
            'generator': list(C.gen.coeffs),
            'defining_set': list(C.defining_set.elems),
            'hermitian_lcd': is_hermitian_lcd(C),
            'euclidean_lcd': is_euclidean_lcd(C),
            'bch_bound': bch_lower_bound(C),
        }
        if args.distance == 'auto':
            report['distance'] = min_distance(C, budget=self.settings.budget).as_dict()
        self.writer.write(report)

    def _cmd_odsm(self, args):
        inst = self._odsm_instance(args)
        getattr(self, f"_odsm_{args.action}")(args, inst)

    def _odsm_setup(self, args, inst: odsm.OdsmInstance):
        report = {
            'field': field_header(inst.field),
            'n': inst.n,
            'k': inst.k,
            'G': inst.G.tolist(),
            'H': inst.H.tolist(),
            'inv_GG': inst.inv_GG.tolist(),
            'inv_HH': inst.inv_HH.tolist(),
        }
        text = '\n'.join([f"[{inst.n},{inst.k}] over {inst.field}",
                          'G', inst.G.to_text().rstrip(),
                          'H', inst.H.to_text().rstrip()])
        self.writer.write(report, text)

    def _odsm_mask(self, args, inst: odsm.OdsmInstance):
        sampler = Distributions(self.settings.seed)
        Q = inst.field.order
        x = parse_vector(args.x, 'x')
        y = parse_vector(args.y, 'y')
        if x is None:
            x = sampler.random_vector(Q, inst.k)
        if y is None:
            y = sampler.random_vector(Q, inst.n - inst.k)
        state = odsm.mask(inst, x, y)
        self.writer.write({'field': field_header(inst.field), 'x': list(x), 'y': list(y),
                           'z': list(state.z)})

    def _odsm_check(self, args, inst: odsm.OdsmInstance):
        z = parse_vector(args.z, 'z')
        result = odsm.inject_and_check(inst, z, parse_vector(args.epsilon, 'epsilon'),
                                       parse_vector(args.y, 'y'))
        self.writer.write({'field': field_header(inst.field), **result.as_dict()})

    def _odsm_sweep(self, args, inst: odsm.OdsmInstance):
        if args.max_weight < args.min_weight:
            raise UsageError("--max-weight must be >= --min-weight")
        if args.samples < 0:
            raise UsageError(f"--samples must be >= 0, got {args.samples}")
        sweep = odsm.detection_sweep(inst, args.max_weight,
                                     sampler=Distributions(self.settings.seed),
                                     budget=self.settings.budget, samples=args.samples,
                                     min_weight=args.min_weight)
        report = {
            'field': field_header(inst.field),
            'n': inst.n,
            'k': inst.k,
            'd': sweep.d,
            'budget_exceeded': sweep.budget_exceeded,
            'rows': [r.as_dict() for r in sweep.rows],
        }
        self.writer.write(report)


def main():
    sys.exit(HermLcdCli().run(sys.argv[1:]))


if __name__ == "__main__":
    main()
