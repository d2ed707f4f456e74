"""CLI命令体系模块"""

import argparse
import logging
import sys
from typing import Any, Dict, Optional

from joinframes import __version__
from joinframes.config import get_limits, set_limits
from joinframes.engine.engine import Engine
from joinframes.errors import CapExceededError, InputError, JoinFramesError
from joinframes.exporters import get_exporter
from joinframes.verify.harness import VerifyConfig

logger = logging.getLogger(__name__)

LOG_FORMAT = '%(asctime)s - %(name)s - %(levelname)s - %(message)s'

# 退出码
EXIT_OK = 0
EXIT_PROPERTY_FAILS = 1
EXIT_INPUT_ERROR = 2
EXIT_CAP_EXCEEDED = 3


class CLI:
    """命令行接口"""

    def __init__(self):
        self.engine = Engine()
        self.parser = argparse.ArgumentParser(
            prog='joinframes',
            description=f'joinframes v{__version__} - join-specifications, ideal lattices and frame generation on finite posets',
            epilog='Exit codes: 0 ok, 1 property fails, 2 input error, 3 cap exceeded.'
        )
        self.parser.add_argument('--version', action='version', version=f'%(prog)s {__version__}')
        self.subparsers = self.parser.add_subparsers(dest='command', help='Available commands')
        self._setup_commands()

    def _common_options(self, formats=('table', 'json')) -> argparse.ArgumentParser:
        common = argparse.ArgumentParser(add_help=False)
        common.add_argument('--format', choices=list(formats), default=formats[0], help='Output format')
        common.add_argument('--max-n', type=int, help='Largest accepted poset')
        common.add_argument('--max-ideals', type=int, help='Largest ideal enumeration')
        common.add_argument('--max-table-entries', type=int, help='Largest lattice operation table (elements squared)')
        common.add_argument('--log-level', default='WARNING',
                            choices=['DEBUG', 'INFO', 'WARNING', 'ERROR'], help='Logging level')
        return common

    def _setup_commands(self):
        """设置命令"""
        commands = self.engine.get_supported_commands()
        common = self._common_options()

        def add(name, formats=('table', 'json')):
            parents = [common] if formats == ('table', 'json') else [self._common_options(formats)]
            return self.subparsers.add_parser(name, help=commands[name], parents=parents)

        validate_parser = add('validate')
        validate_parser.add_argument('input', help='Workspace file (.poset or .json)')

        for name in ('closure', 'upsilon'):
            set_parser = add(name)
            set_parser.add_argument('input', help='Workspace file')
            set_parser.add_argument('--spec', default='@max', help='Join-specification name (@B, @inf, @max built in)')
            set_parser.add_argument('--set', required=True, help='Subset, e.g. "a b c"')

        ideals_parser = add('ideals', formats=('table', 'json', 'dot'))
        ideals_parser.add_argument('input', help='Workspace file')
        ideals_parser.add_argument('--spec', default='@max', help='Join-specification name')

        fg_parser = add('frame-generating')
        fg_parser.add_argument('input', help='Workspace file')
        fg_parser.add_argument('--spec', default='@max', help='Join-specification name')
        fg_parser.add_argument('--method', default='5', choices=['1', '4', '5', '7', '10', 'all'],
                               help='Characterisation to use')

        uplus_parser = add('uplus')
        uplus_parser.add_argument('input', help='Workspace file')
        uplus_parser.add_argument('--spec', default='@max', help='Join-specification name')
        uplus_parser.add_argument('--set', help='Test membership of one set instead of listing U+')

        for name in ('uminus', 'maximal'):
            spec_parser = add(name)
            spec_parser.add_argument('input', help='Workspace file')
            spec_parser.add_argument('--spec', default='@max', help='Join-specification name')

        for name in ('meet', 'join'):
            combine_parser = add(name)
            combine_parser.add_argument('input', help='Workspace file')
            combine_parser.add_argument('--specs', required=True, help='Comma-separated names, e.g. U1,U2')
            combine_parser.add_argument('--in', dest='lattice', choices=['jf', 'jf+'], default='jf',
                                        help='Lattice to compute in')

        top_parser = add('top')
        top_parser.add_argument('input', help='Workspace file')

        lift_parser = add('lift')
        lift_parser.add_argument('input', help='Domain workspace file')
        lift_parser.add_argument('target', help='Codomain workspace file')
        lift_parser.add_argument('--map', required=True, help='Assignment, e.g. "a:d,b:d"')
        lift_parser.add_argument('--spec', default='@max', help='Domain join-specification')
        lift_parser.add_argument('--cod-spec', default='@max', help='Codomain join-specification')

        verify_parser = add('verify')
        verify_parser.add_argument('--config', help='YAML verification config')
        verify_parser.add_argument('--seed', type=int, help='64-bit seed')
        verify_parser.add_argument('--samples', type=int, help='Number of random instances')
        verify_parser.add_argument('--n', type=int, help='Largest random poset')
        verify_parser.add_argument('--min-n', type=int, help='Smallest random poset')
        verify_parser.add_argument('--edge-prob', help='Edge probability, e.g. 1/2')
        verify_parser.add_argument('--exhaustive', type=int, dest='exhaustive_n',
                                   help='Also check every poset up to this size')
        verify_parser.add_argument('--laws', help='Comma-separated suites or law names')
        verify_parser.add_argument('--workers', type=int, dest='max_workers', help='Number of parallel workers')
        verify_parser.add_argument('--executor', choices=['process', 'thread'],
                                   help='Run workers as processes (default) or threads')
        verify_parser.add_argument('--no-shrink', action='store_true', help='Report failures unshrunk')

        export_parser = add('export', formats=('json', 'dot'))
        export_parser.add_argument('input', help='Workspace file')
        export_parser.add_argument('--spec', help='Export the ideal lattice of this specification instead')

    def _configure(self, args):
        logging.basicConfig(level=getattr(logging, args.log_level), format=LOG_FORMAT, stream=sys.stderr)
        logging.getLogger().setLevel(getattr(logging, args.log_level))
        set_limits(get_limits().with_overrides(
            max_n=args.max_n, max_ideals=args.max_ideals, max_table_entries=args.max_table_entries,
        ))

    def run(self, args=None):
        """运行命令

        Args:
            args: 命令行参数

        Returns:
            int: 退出码
        """
        if args is None:
            args = sys.argv[1:]

        try:
            parsed_args = self.parser.parse_args(args)
        except SystemExit as e:
            return e.code if isinstance(e.code, int) else EXIT_INPUT_ERROR

        if not parsed_args.command:
            self.parser.print_help()
            return EXIT_INPUT_ERROR

        handler = getattr(self, '_run_' + parsed_args.command.replace('-', '_'))
        try:
            self._configure(parsed_args)
            return handler(parsed_args)
        except CapExceededError as e:
            print(f'Error: {e}', file=sys.stderr)
            return EXIT_CAP_EXCEEDED
        except InputError as e:
            print(f'Error: {e}', file=sys.stderr)
            return EXIT_INPUT_ERROR
        except JoinFramesError as e:
            print(f'Error: {e}', file=sys.stderr)
            return EXIT_PROPERTY_FAILS

    def _emit(self, result: Dict[str, Any], fmt: str) -> int:
        """打印结果字典，按 "ok" 给出退出码"""
        if fmt == 'dot':
            raise InputError('dot output is only available for ideals and export')
        sys.stdout.write(get_exporter('report', fmt).export(result))
        return EXIT_OK if result.get('ok', True) else EXIT_PROPERTY_FAILS

    def _run_validate(self, args):
        """运行validate命令"""
        workspace = self.engine.load(args.input)
        return self._emit(self.engine.validate(workspace), args.format)

    def _run_closure(self, args):
        workspace = self.engine.load(args.input)
        return self._emit(self.engine.closure(workspace, args.spec, args.set), args.format)

    def _run_upsilon(self, args):
        workspace = self.engine.load(args.input)
        return self._emit(self.engine.upsilon(workspace, args.spec, args.set), args.format)

    def _run_ideals(self, args):
        """运行ideals命令；dot 与 json 输出格本身，table 输出理想列表"""
        workspace = self.engine.load(args.input)
        lattice = self.engine.ideals(workspace, args.spec)
        if args.format == 'table':
            return self._emit(self.engine.ideals_report(lattice), 'table')
        sys.stdout.write(get_exporter('lattice', args.format).export(lattice))
        return EXIT_OK

    def _run_frame_generating(self, args):
        workspace = self.engine.load(args.input)
        result = self.engine.frame_generating(workspace, args.spec, args.method)
        return self._emit(result, args.format)

    def _run_uplus(self, args):
        workspace = self.engine.load(args.input)
        return self._emit(self.engine.uplus(workspace, args.spec, args.set), args.format)

    def _run_uminus(self, args):
        workspace = self.engine.load(args.input)
        return self._emit(self.engine.uminus(workspace, args.spec), args.format)

    def _run_combine(self, args, operation):
        workspace = self.engine.load(args.input)
        names = [name.strip() for name in args.specs.split(',') if name.strip()]
        return self._emit(self.engine.combine(workspace, names, operation, args.lattice), args.format)

    def _run_meet(self, args):
        return self._run_combine(args, 'meet')

    def _run_join(self, args):
        return self._run_combine(args, 'join')

    def _run_top(self, args):
        workspace = self.engine.load(args.input)
        return self._emit(self.engine.top(workspace), args.format)

    def _run_maximal(self, args):
        workspace = self.engine.load(args.input)
        return self._emit(self.engine.maximal(workspace, args.spec), args.format)

    def _run_lift(self, args):
        """运行lift命令"""
        source = self.engine.load(args.input)
        target = self.engine.load(args.target)
        result = self.engine.lift(source, target, args.map, args.spec, args.cod_spec)
        return self._emit(result, args.format)

    def _verify_config(self, args) -> VerifyConfig:
        """--config 文件打底，命令行参数覆盖"""
        data = VerifyConfig.from_yaml(args.config).to_dict() if args.config else {}
        overrides = {
            key: getattr(args, key)
            for key in ('seed', 'samples', 'n', 'min_n', 'edge_prob', 'exhaustive_n', 'max_workers', 'executor')
            if getattr(args, key) is not None
        }
        if 'n' in overrides and 'min_n' not in overrides:
            data.pop('min_n', None)
        data.update(overrides)
        if args.laws is not None:
            data['laws'] = args.laws
        if args.no_shrink:
            data['shrink'] = False
        return VerifyConfig.from_dict(data)

    def _run_verify(self, args):
        """运行verify命令"""
        config = self._verify_config(args)
        report = self.engine.verify(config)
        if args.format == 'table':
            return self._emit(self._verify_summary(report), 'table')
        return self._emit(report, args.format)

    def _verify_summary(self, report: Dict[str, Any]) -> Dict[str, Any]:
        rows = []
        for name, counts in sorted(report['laws'].items()):
            rows.append({'law': name, 'passed': counts['passed'], 'failed': counts['failed'],
                         'skipped': counts['skipped']})
        for failure in report['failures']:
            witness = failure.get('shrunk', failure['witness'])
            rows.append({'failure': failure['law'], 'instance': failure['instance'],
                         'message': failure['message'], 'elements': witness['elements'],
                         'covers': witness['covers'], 'U': witness['U'], 'V': witness['V']})
        summary = {'ok': report['ok'], 'instances': report['instances'], 'rows': rows}
        if 'poset_laws' in report:
            summary['poset_laws'] = report['poset_laws']
        return summary

    def _run_export(self, args):
        """运行export命令"""
        workspace = self.engine.load(args.input)
        if args.spec:
            obj, kind = self.engine.ideals(workspace, args.spec), 'lattice'
        else:
            obj, kind = workspace, 'workspace'
        sys.stdout.write(get_exporter(kind, args.format).export(obj))
        return EXIT_OK


def main(args: Optional[list] = None):
    """CLI命令入口点"""
    cli = CLI()
    sys.exit(cli.run(args))


# 命令行入口
if __name__ == '__main__':
    main()
