import math
from unittest import TestCase

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.core_settings import CoreSettings
from alphalomax.src.core.exceptions.ConvergenceException import ConvergenceException
from alphalomax.src.core.methods import validation_method


def _run_group(group, full: bool = False):
    return [validation_method._run(name, check) for name, check in group(CoreSettings(), full)]


class TestCheckResults(TestCase):
    def test_relative_and_absolute(self):
        self.assertTrue(validation_method.relative_check('close', 1.0 + 1e-9, 1.0, 1e-8).passed)
        self.assertFalse(validation_method.relative_check('far', 1.1, 1.0, 1e-8).passed)
        self.assertTrue(validation_method.absolute_check('zero', 1e-17, 0.0, 1e-16).passed)

    def test_ordering_and_bound(self):
        self.assertTrue(validation_method.ordering_check('up', [1.0, 2.0, 3.0], True).passed)
        self.assertFalse(validation_method.ordering_check('down', [3.0, 2.0, 2.5], False).passed)
        self.assertTrue(validation_method.upper_bound_check('below', 1.0, 1.5).passed)
        self.assertFalse(validation_method.upper_bound_check('above', 2.0, 1.5).passed)

    def test_raising_check_is_reported(self):
        def diverging():
            raise ConvergenceException('series not converged', 'relax the tolerance')

        with self.assertLogs(core_logger, level='WARNING'):
            result = validation_method._run('diverging', diverging)

        self.assertFalse(result.passed)
        self.assertTrue(math.isnan(result.value))
        self.assertIn('ConvergenceException: series not converged', result.message)


class TestCheckGroups(TestCase):
    def test_fox_h_grid(self):
        results = _run_group(validation_method._fox_h_checks)
        self.assertEqual(len(results), 9)
        self.assertTrue(all(result.passed for result in results), [r for r in results if not r.passed])

    def test_outage_group(self):
        results = _run_group(validation_method._outage_checks)
        self.assertTrue(all(result.passed for result in results), [r for r in results if not r.passed])

    def test_rad_properties(self):
        checks = [check for name, check in validation_method._fitting_checks(CoreSettings(), False)
                  if name == 'rad_properties']
        self.assertEqual(len(checks), 1)
        result = validation_method._run('rad_properties', checks[0])
        self.assertTrue(result.passed, result.message)

    def test_one_failing_check_keeps_the_rest(self):
        def group(settings, full):
            yield 'first', lambda: validation_method.absolute_check('first', 0.0, 0.0, 0.0)
            yield 'second', lambda: 1 / 0
            yield 'third', lambda: validation_method.absolute_check('third', 1.0, 1.0, 0.0)

        self.assertEqual([result.passed for result in _run_group(group)], [True, False, True])

    def test_full_adds_coverage(self):
        quick = [name for name, _ in validation_method._montecarlo_checks(CoreSettings(), False)]
        full = [name for name, _ in validation_method._montecarlo_checks(CoreSettings(), True)]
        self.assertNotIn('montecarlo_coverage', quick)
        self.assertEqual(full.count('montecarlo_coverage'), 4)
        self.assertEqual(quick.count('ks_two_sample'), 2)
