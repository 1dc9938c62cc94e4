import io
import json
import tempfile
import unittest
from contextlib import redirect_stderr, redirect_stdout
from pathlib import Path

from HibiLevelAJM.backend.meta import ABCSubcommand
from HibiLevelAJM.cli import (EXIT_ASSERTION, EXIT_CAP, EXIT_INPUT, EXIT_OK, BaseSubcommand, SUBCOMMANDS,
                              main)


class CLITest(unittest.TestCase):
    DIAMOND = {"elements": ["a", "b", "c", "d"], "covers": [["a", "b"], ["a", "c"], ["b", "d"], ["c", "d"]]}
    # a<b<c, a<d, e<c: neither principal filters nor principal ideals are all pure
    NEITHER = "5\n0 1\n1 2\n0 3\n4 2\n"

    @classmethod
    def setUpClass(cls):
        cls._tmp = tempfile.TemporaryDirectory()
        cls.tmp = Path(cls._tmp.name)
        cls.diamond_path = cls.tmp / 'diamond.json'
        cls.diamond_path.write_text(json.dumps(cls.DIAMOND))
        cls.neither_path = cls.tmp / 'neither.txt'
        cls.neither_path.write_text(cls.NEITHER)

    @classmethod
    def tearDownClass(cls):
        cls._tmp.cleanup()

    def run_cli(self, *argv):
        out, err = io.StringIO(), io.StringIO()
        with redirect_stdout(out), redirect_stderr(err):
            code = main(list(argv))
        return code, out.getvalue(), err.getvalue()

    def test_analyze_json(self):
        code, out, _ = self.run_cli('analyze', '--poset', str(self.diamond_path), '--json')
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertTrue(report['is_level'])
        self.assertEqual(report['type'], 1)
        self.assertEqual(report['h_vector'], [1, 1])
        self.assertEqual(report['generator_degrees'], [4])

    def test_output_is_deterministic(self):
        first = self.run_cli('analyze', '--poset', str(self.diamond_path), '--json')[1]
        second = self.run_cli('analyze', '--poset', str(self.diamond_path), '--json')[1]
        self.assertEqual(first, second)
        self.assertEqual(list(json.loads(first)), sorted(json.loads(first)))

    def test_out_file(self):
        target = self.tmp / 'reports' / 'diamond.json'
        code, out, _ = self.run_cli('analyze', '--poset', str(self.diamond_path), '--json', '--out', str(target))
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(out, '')
        self.assertTrue(json.loads(target.read_text())['is_level'])

    def test_out_not_writable(self):
        blocker = self.tmp / 'afile'
        blocker.write_text('not a directory')
        code, out, err = self.run_cli('analyze', '--poset', str(self.diamond_path), '--out', str(blocker / 'x.json'))
        self.assertEqual(code, EXIT_INPUT)
        self.assertEqual(out, '')
        self.assertTrue(err.strip().splitlines()[-1].startswith('ERROR: cannot write'))

    def test_schubert(self):
        code, out, _ = self.run_cli('schubert', '--m', '2', '--n', '4', '--gamma', '1,2', '--json')
        self.assertEqual(code, EXIT_OK)
        report = json.loads(out)
        self.assertEqual(report['hibi']['type'], 1)
        self.assertTrue(report['hibi']['is_level'])
        self.assertEqual(report['a'], [3, 4])

    def test_schubert_from_a(self):
        code, out, _ = self.run_cli('schubert', '--m', '2', '--n', '4', '--a', '2,4', '--json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['gamma'], [1, 3])

    def test_sweep_text(self):
        code, out, _ = self.run_cli('sweep', '--m', '2', '--n', '4', '--all-gamma')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(len(out.strip().splitlines()), 7)
        self.assertNotIn('NOT level', out)

    def test_theorem_scan(self):
        code, out, _ = self.run_cli('theorem-scan', '--max-n', '3')
        self.assertEqual(code, EXIT_OK)
        self.assertIn('0 counterexamples', out)

    def test_search_nonlevel(self):
        code, out, _ = self.run_cli('search-nonlevel', '--max-n', '2', '--json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)['count'], 0)

    def test_verify_lemma(self):
        code, out, _ = self.run_cli('verify-lemma', '--poset', str(self.diamond_path), '--trials', '10',
                                    '--seed', '5', '--json')
        self.assertEqual(code, EXIT_OK)
        self.assertEqual(json.loads(out)[0]['random_checked'], 10)

    def test_verify_lemma_needs_purity(self):
        code, _, err = self.run_cli('verify-lemma', '--poset', str(self.neither_path))
        self.assertEqual(code, EXIT_INPUT)
        self.assertTrue(err.strip().splitlines()[-1].startswith('ERROR:'))

    def test_sagbi_check(self):
        code, out, _ = self.run_cli('sagbi-check', '--m', '2', '--n', '4', '--gamma', '1,2', '--max-deg', '2',
                                    '--json')
        self.assertEqual(code, EXIT_OK)
        scans = json.loads(out)[0]['standard_monomials']
        self.assertEqual([s['count'] for s in scans], [1, 6, 20])

    def test_missing_file(self):
        code, _, err = self.run_cli('analyze', '--poset', str(self.tmp / 'nope.json'))
        self.assertEqual(code, EXIT_INPUT)
        self.assertIn('ERROR:', err)

    def test_bad_gamma(self):
        code, _, _ = self.run_cli('schubert', '--m', '2', '--n', '4', '--gamma', '3,1')
        self.assertEqual(code, EXIT_INPUT)

    def test_resource_cap(self):
        code, _, err = self.run_cli('analyze', '--poset', str(self.diamond_path), '--enumeration-cap', '1')
        self.assertEqual(code, EXIT_CAP)
        self.assertIn('enumeration_cap', err)

    def test_usage_error(self):
        with redirect_stderr(io.StringIO()):
            with self.assertRaises(SystemExit) as ctx:
                main(['schubert', '--m', '2'])
        self.assertEqual(ctx.exception.code, EXIT_INPUT)

    def test_exit_codes_are_distinct(self):
        self.assertEqual(len({EXIT_OK, EXIT_INPUT, EXIT_CAP, EXIT_ASSERTION}), 4)


class SubcommandMetaTest(unittest.TestCase):
    def test_registered_commands(self):
        names = [command.COMMAND_NAME for command in SUBCOMMANDS]
        self.assertEqual(names, ['analyze', 'schubert', 'sweep', 'search-nonlevel', 'verify-lemma',
                                 'sagbi-check', 'theorem-scan'])
        self.assertTrue(all(isinstance(command, ABCSubcommand) for command in SUBCOMMANDS))

    def test_missing_name_rejected(self):
        with self.assertRaises(TypeError):
            class NamelessCommand(BaseSubcommand):
                COMMAND_HELP = "does nothing"

                def run(self):
                    return None

    def test_empty_help_rejected(self):
        with self.assertRaises(TypeError):
            class SilentCommand(BaseSubcommand):
                COMMAND_NAME = 'silent'
                COMMAND_HELP = ''

                def run(self):
                    return None


if __name__ == '__main__':
    unittest.main()
