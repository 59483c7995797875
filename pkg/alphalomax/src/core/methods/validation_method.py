import math
from dataclasses import asdict, dataclass
from typing import Callable, Iterator, List, Tuple

import numpy as np
from scipy import integrate, special

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.core_settings import CoreSettings
from alphalomax.src.core.methods import bler_method, ber_method, capacity_method, fitting_helper, fitting_method, \
    montecarlo_method, outage_method
from alphalomax.src.core.methods.quadrature_method import quadrature_reference
from alphalomax.src.core.models.channel import channel_distribution, channel_sampler
from alphalomax.src.core.models.channel.channel_properties import db_to_linear, make_channel, make_params
from alphalomax.src.core.models.empirical.empirical_divergence import kl_divergence, rad
from alphalomax.src.core.models.empirical.empirical_properties import uniform_empirical
from alphalomax.src.core.models.metrics.metrics_properties import make_modulation, make_short_packet
from alphalomax.src.core.models.montecarlo.montecarlo_properties import McConfig
from alphalomax.src.core.special_functions.fox_h import FoxHParams, fox_h

MODULATIONS = ('bpsk', 'bfsk', 'msk')
BLOCKLENGTHS = (100, 200, 400)
INFO_BITS = 50
COVERAGE_SEEDS = 100
COVERAGE_HITS = 90
COVERAGE_SAMPLES = 20000

Check = Tuple[str, Callable[[], 'CheckResult']]


@dataclass(frozen=True)
class CheckResult:
    name: str
    value: float
    reference: float
    error: float
    tolerance: float
    passed: bool
    message: str = ''


def relative_check(name: str, value: float, reference: float, tolerance: float) -> CheckResult:
    error = abs(value - reference) / abs(reference) if reference != 0 else abs(value)
    return CheckResult(name, float(value), float(reference), float(error), tolerance, bool(error <= tolerance))


def absolute_check(name: str, value: float, reference: float, tolerance: float) -> CheckResult:
    error = abs(value - reference)
    return CheckResult(name, float(value), float(reference), float(error), tolerance, bool(error <= tolerance))


def upper_bound_check(name: str, value: float, bound: float) -> CheckResult:
    return CheckResult(name, float(value), float(bound), float(max(value - bound, 0.0)), 0.0, bool(value <= bound))


def ordering_check(name: str, values: List[float], increasing: bool) -> CheckResult:
    steps = np.diff(values)
    passed = bool(np.all(steps > 0)) if increasing else bool(np.all(steps < 0))
    worst = float(np.min(steps) if increasing else -np.max(steps))
    return CheckResult(name, worst, 0.0, float(max(-worst, 0.0)), 0.0, passed,
                       'values {}'.format(', '.join('{:.6g}'.format(value) for value in values)))


def _run(name: str, check: Callable[[], CheckResult]) -> CheckResult:
    try:
        return check()
    except Exception as e:
        core_logger.warning('Check {} raised {}: {}'.format(name, type(e).__name__, getattr(e, 'description', e)))
        return CheckResult(name, math.nan, math.nan, math.nan, math.nan, False, '{}: {}'.format(
            type(e).__name__, getattr(e, 'description', None) or e))


def _fox_h_checks(settings: CoreSettings, full: bool) -> Iterator[Check]:
    def reduction(lam, z):
        h = FoxHParams.build(1, 1, upper=[(1.0 - lam, 1.0)], lower=[(0.0, 1.0)])
        return relative_check('fox_h_reduction_lambda{}_z{}'.format(lam, z), fox_h(h, z, settings.contour),
                              special.gamma(lam) * (1.0 + z) ** -lam, 1e-8)

    for lam in (1.5, 2.5, 4.0):
        for z in (0.1, 1.0, 10.0):
            yield 'fox_h_reduction', lambda lam=lam, z=z: reduction(lam, z)


def _log_axis_integral(function: Callable[[float], float], ch, rate: float = None, upper: float = None) -> float:
    """
    int_0^upper function(g) dg on g = exp(y). The range in y stops where the integrand has
    decayed by e^-100: at rate alpha towards 0 and at the given rate (default alpha lambda) above.
    """
    rate = ch.alpha * ch.lam if rate is None else rate
    center = math.log(channel_distribution.snr_quantile(ch, 0.5))
    low = center - 100.0 / ch.alpha
    high = center + 100.0 / rate if upper is None else math.log(upper)

    def integrand(y):
        g = math.exp(y)
        return function(g) * g

    segments = ((low, center), (center, high)) if low < center < high else ((low, high),)
    return sum(integrate.quad(integrand, a, b, epsabs=0, epsrel=1e-12, limit=500)[0] for a, b in segments)


def _distribution_checks(settings: CoreSettings, full: bool) -> Iterator[Check]:
    yield 'scale_constant', lambda: relative_check('scale_constant_alpha2_lambda1', make_params(2, 1).zeta,
                                                   math.pi ** 2 / 4, 1e-12)

    grid = ((0.5, 2.5), (1.75, 1.25), (3.5, 1.5))
    if full:
        grid += ((1.0, 2.0), (2.0, 1.25), (2.5, 1.6), (7.0, 1.5))

    for alpha, lam in grid:
        label = 'alpha{}_lambda{}'.format(alpha, lam)
        ch = make_channel(alpha, lam, 3.0)

        yield 'pdf_normalization', lambda ch=ch, label=label: absolute_check(
            'pdf_normalization_' + label, _log_axis_integral(lambda g: channel_distribution.snr_pdf(ch, g), ch),
            1.0, 1e-9)
        yield 'mean', lambda ch=ch, label=label: relative_check(
            'mean_vs_pdf_integral_' + label,
            _log_axis_integral(lambda g: g * channel_distribution.snr_pdf(ch, g), ch, ch.alpha * ch.lam - 1.0),
            ch.mean_snr, 1e-8)
        yield 'moment', lambda ch=ch, label=label: relative_check('moment1_' + label,
                                                                 channel_distribution.moment(ch, 1), ch.mean_snr,
                                                                 1e-12)

        def cdf_vs_pdf(ch=ch, label=label):
            gamma = float(channel_distribution.snr_quantile(ch, 0.7))
            area = _log_axis_integral(lambda g: channel_distribution.snr_pdf(ch, g), ch, upper=gamma)
            return absolute_check('cdf_vs_pdf_integral_' + label, channel_distribution.snr_cdf(ch, gamma), area,
                                  1e-8)

        yield 'cdf_vs_pdf', cdf_vs_pdf

        def round_trip(ch=ch, label=label):
            levels = np.linspace(0.01, 0.99, 99)
            values = channel_distribution.snr_cdf(ch, channel_distribution.snr_quantile(ch, levels))
            return absolute_check('quantile_round_trip_' + label, float(np.max(np.abs(values - levels))), 0.0,
                                  1e-12)

        yield 'quantile_round_trip', round_trip

    for lam in (1.5, 2.0, 4.0):
        def lomax(lam=lam):
            mean = 2.0
            ch = make_channel(1.0, lam, mean)
            scale = 1.0 / (lam - 1.0) / mean
            gamma = np.array([0.01, 0.5, 2.0, 10.0, 1000.0])
            pdf_error = np.max(np.abs(channel_distribution.snr_pdf(ch, gamma) /
                                      (lam * scale * (1.0 + scale * gamma) ** (-lam - 1.0)) - 1.0))
            cdf_error = np.max(np.abs(channel_distribution.snr_cdf(ch, gamma) /
                                      (1.0 - (1.0 + scale * gamma) ** -lam) - 1.0))
            return absolute_check('lomax_reduction_lambda{}'.format(lam), float(max(pdf_error, cdf_error)), 0.0,
                                  1e-12)

        yield 'lomax_reduction', lomax

    def gmgf():
        ch = make_channel(1, 2, 1)
        reference = integrate.quad(lambda g: 2 * (1 + g) ** -3 * math.exp(-g), 0, np.inf, epsabs=0, epsrel=1e-12)[0]
        return relative_check('gmgf_n0_s1', channel_distribution.gmgf(ch, 0, 1, settings.contour), reference, 1e-8)

    yield 'gmgf', gmgf


def _outage_checks(settings: CoreSettings, full: bool) -> Iterator[Check]:
    yield 'outage_hand_value', lambda: relative_check(
        'outage_hand_value', outage_method.outage_probability(make_channel(1, 2, 10), gamma0=1.0), 1 - 1.1 ** -2,
        1e-12)

    for alpha in (1.0, 1.75, 2.0, 3.0):
        for lam in (1.25, 2.5):
            def slope(alpha=alpha, lam=lam):
                low = outage_method.outage_probability(make_channel(alpha, lam, db_to_linear(40)), gamma0=1.0)
                high = outage_method.outage_probability(make_channel(alpha, lam, db_to_linear(60)), gamma0=1.0)
                return relative_check('outage_slope_alpha{}_lambda{}'.format(alpha, lam),
                                      (math.log10(high) - math.log10(low)) / 2.0, -alpha, 0.02)

            yield 'outage_slope', slope


def _ber_checks(settings: CoreSettings, full: bool) -> Iterator[Check]:
    def versus_quadrature(alpha, lam, snr_db, name, tolerance=1e-5):
        ch = make_channel(alpha, lam, db_to_linear(snr_db))
        modulation = make_modulation(name)
        return relative_check('ber_{}_vs_quadrature_alpha{}_{}dB'.format(name, alpha, snr_db),
                              ber_method.ber_closed_form(ch, modulation, settings.contour),
                              quadrature_reference('ber', ch, modulation, settings.quadrature), tolerance)

    snr_grid = range(0, 31, 5) if full else (0, 10, 20, 30)
    for name in MODULATIONS:
        for snr_db in (snr_grid if full or name == 'bpsk' else (10,)):
            yield 'ber_vs_quadrature', lambda name=name, snr_db=snr_db: versus_quadrature(1.75, 1.25, snr_db, name)

    for name in MODULATIONS:
        def asymptote(name=name):
            ch = make_channel(1.75, 1.25, db_to_linear(50))
            modulation = make_modulation(name)
            exact = ber_method.ber_exact(ch, modulation, settings.contour, settings.quadrature)
            return relative_check('ber_{}_asymptote_50dB'.format(name),
                                  ber_method.ber_asymptotic(ch, modulation).value_at(ch.mean_snr), exact, 0.05)

        yield 'ber_asymptote', asymptote

    for alpha in (1.0, 2.0, 3.0):
        for lam in (1.25, 2.5):
            for name in (MODULATIONS if full else ('bpsk',)):
                def slope(alpha=alpha, lam=lam, name=name):
                    modulation = make_modulation(name)
                    low, high = (ber_method.ber_exact(make_channel(alpha, lam, db_to_linear(snr_db)), modulation,
                                                      settings.contour, settings.quadrature) for snr_db in (40, 60))
                    return relative_check('ber_{}_slope_alpha{}_lambda{}'.format(name, alpha, lam),
                                          (math.log10(high) - math.log10(low)) / 2.0, -alpha, 0.02)

                yield 'ber_slope', slope

    for alpha, lam, snr_db in ((7.0, 1.5, 70), (3.5, 6.0, 100), (7.0, 1.5, -30)):
        def steep(alpha=alpha, lam=lam, snr_db=snr_db):
            ch = make_channel(alpha, lam, db_to_linear(snr_db))
            bpsk = make_modulation('bpsk')
            return relative_check('ber_exact_alpha{}_lambda{}_{}dB'.format(alpha, lam, snr_db),
                                  ber_method.ber_exact(ch, bpsk, settings.contour, settings.quadrature),
                                  quadrature_reference('ber', ch, bpsk, settings.quadrature), 1e-6)

        yield 'ber_exact', steep


def _capacity_checks(settings: CoreSettings, full: bool) -> Iterator[Check]:
    alphas = (1.0, 2.0, 4.0, 7.0)
    for alpha in alphas:
        for snr_db in (0, 10, 20):
            def versus_quadrature(alpha=alpha, snr_db=snr_db):
                ch = make_channel(alpha, 1.5, db_to_linear(snr_db))
                return relative_check('capacity_vs_quadrature_alpha{}_{}dB'.format(alpha, snr_db),
                                      capacity_method.capacity_closed_form(ch, settings.contour),
                                      quadrature_reference('capacity', ch, None, settings.quadrature), 1e-6)

            yield 'capacity_vs_quadrature', versus_quadrature

        def asymptote(alpha=alpha):
            ch = make_channel(alpha, 1.5, db_to_linear(40))
            return absolute_check('capacity_asymptote_alpha{}_40dB'.format(alpha),
                                  capacity_method.capacity_asymptotic(ch),
                                  capacity_method.capacity_exact(ch, settings.contour, settings.quadrature), 0.01)

        yield 'capacity_asymptote', asymptote

    def exact_at(alpha, snr_db):
        return float(capacity_method.capacity_exact(make_channel(alpha, 1.5, db_to_linear(snr_db)),
                                                    settings.contour, settings.quadrature))

    yield 'capacity_alpha_ordering', lambda: ordering_check('capacity_increases_with_alpha_10dB',
                                                            [exact_at(alpha, 10) for alpha in alphas], True)
    yield 'capacity_awgn_bound', lambda: upper_bound_check('capacity_below_awgn_alpha7_10dB', exact_at(7.0, 10),
                                                           math.log2(1.0 + db_to_linear(10)))


def _bler_checks(settings: CoreSettings, full: bool) -> Iterator[Check]:
    snr_grid = range(0, 21, 2) if full else (0, 10, 20)

    def versus_quadrature(alpha, n, snr_db):
        ch = make_channel(alpha, 1.25, db_to_linear(snr_db))
        packet = make_short_packet(n, INFO_BITS)
        name = 'bler_vs_quadrature_alpha{}_N{}_{}dB'.format(alpha, n, snr_db)
        reference = quadrature_reference('bler', ch, packet, settings.quadrature)
        exact = bler_method.bler_closed_form(ch, packet, settings.series)
        if reference <= 1e-10:
            return absolute_check(name, exact, reference, 1e-16)
        return relative_check(name, exact, reference, 1e-6)

    for alpha in (1.0, 1.75):
        for n in BLOCKLENGTHS:
            for snr_db in snr_grid:
                yield 'bler_vs_quadrature', lambda alpha=alpha, n=n, snr_db=snr_db: versus_quadrature(alpha, n, snr_db)

        yield 'bler_blocklength_ordering', lambda alpha=alpha: ordering_check(
            'bler_decreases_with_blocklength_alpha{}_10dB'.format(alpha),
            [float(bler_method.bler_exact(make_channel(alpha, 1.25, db_to_linear(10)),
                                          make_short_packet(n, INFO_BITS), settings.series, settings.quadrature))
             for n in BLOCKLENGTHS], False)

        def asymptote(alpha=alpha):
            ch = make_channel(alpha, 1.25, db_to_linear(40))
            packet = make_short_packet(100, INFO_BITS)
            return relative_check('bler_asymptote_alpha{}_40dB'.format(alpha),
                                  bler_method.bler_asymptotic(ch, packet),
                                  bler_method.bler_exact(ch, packet, settings.series, settings.quadrature), 0.05)

        yield 'bler_asymptote', asymptote

        yield 'bler_far_below_threshold', lambda alpha=alpha: versus_quadrature(alpha, 100, -50)

    def lomax_asymptote():
        ch = make_channel(1, 2, db_to_linear(40))
        packet = make_short_packet(100, INFO_BITS)
        return relative_check('bler_asymptote_alpha1_closed_form', bler_method.bler_asymptotic(ch, packet),
                              2 * packet.eta / db_to_linear(40), 1e-9)

    yield 'bler_asymptote', lomax_asymptote


def _montecarlo_checks(settings: CoreSettings, full: bool) -> Iterator[Check]:
    defaults = settings.montecarlo
    n_samples = 10 ** 6 if full else 10 ** 5
    cases = (
        ('op', make_channel(1, 2, 10), 1.0, lambda ch, aux: outage_method.outage_probability(ch, gamma0=aux)),
        ('ber', make_channel(1.75, 1.25, db_to_linear(10)), make_modulation('bpsk'),
         lambda ch, aux: ber_method.ber_exact(ch, aux, settings.contour, settings.quadrature)),
        ('capacity', make_channel(2, 1.5, 10), None,
         lambda ch, aux: capacity_method.capacity_exact(ch, settings.contour, settings.quadrature)),
        ('bler', make_channel(1.75, 1.25, db_to_linear(5)), make_short_packet(100, INFO_BITS),
         lambda ch, aux: bler_method.bler_exact(ch, aux, settings.series, settings.quadrature)),
    )

    for metric, ch, aux, exact in cases:
        def estimate(metric=metric, ch=ch, aux=aux, exact=exact):
            mc = McConfig(defaults.seed, n_samples, defaults.n_streams, defaults.chunk_size)
            result = montecarlo_method.estimate_metric(metric, ch, aux, mc)
            return absolute_check('montecarlo_{}'.format(metric), result.mean, exact(ch, aux), 4 * result.std_error)

        yield 'montecarlo_estimate', estimate

        if full:
            def coverage(metric=metric, ch=ch, aux=aux, exact=exact):
                reference = exact(ch, aux)
                hits = sum(montecarlo_method.estimate_metric(
                    metric, ch, aux, McConfig(seed, COVERAGE_SAMPLES, defaults.n_streams, defaults.chunk_size))
                           .contains(reference) for seed in range(COVERAGE_SEEDS))
                return CheckResult('montecarlo_{}_coverage'.format(metric), float(hits), float(COVERAGE_SEEDS),
                                   float(COVERAGE_SEEDS - hits), float(COVERAGE_SEEDS - COVERAGE_HITS),
                                   hits >= COVERAGE_HITS)

            yield 'montecarlo_coverage', coverage

    for alpha in (1.75, 2.0):
        ch = make_channel(alpha, 1.25, 1)
        for method in (channel_sampler.INVERSE_CDF, channel_sampler.PHYSICAL):
            def one_sample(ch=ch, method=method, alpha=alpha):
                batch = channel_sampler.sample(ch, n_samples, defaults.seed, method, defaults.n_streams,
                                               defaults.chunk_size)
                statistic, passed = montecarlo_method.ks_test(batch, ch)
                return CheckResult('ks_{}_alpha{}'.format(method, alpha), statistic, 0.0, statistic,
                                   montecarlo_method.ks_critical_value(n_samples), passed)

            yield 'ks_one_sample', one_sample

        def two_sample(ch=ch, alpha=alpha):
            inverse = channel_sampler.sample(ch, n_samples, defaults.seed, channel_sampler.INVERSE_CDF,
                                             defaults.n_streams, defaults.chunk_size)
            physical = channel_sampler.sample(ch, n_samples, defaults.seed + 1, channel_sampler.PHYSICAL,
                                              defaults.n_streams, defaults.chunk_size)
            statistic, passed = montecarlo_method.ks_two_sample(inverse, physical)
            return CheckResult('ks_two_sample_alpha{}'.format(alpha), statistic, 0.0, statistic,
                               montecarlo_method.ks_two_sample_critical_value(n_samples, n_samples), passed)

        yield 'ks_two_sample', two_sample

    def determinism():
        ch = make_channel(1.75, 1.25, 1)
        single = montecarlo_method.estimate_metric('capacity', ch, None, McConfig(defaults.seed, 20000, 1, 4096))
        split = montecarlo_method.estimate_metric('capacity', ch, None, McConfig(defaults.seed, 20000, 3, 4096))
        return absolute_check('montecarlo_stream_determinism', split.mean, single.mean, 0.0)

    yield 'montecarlo_stream_determinism', determinism


def _fitting_checks(settings: CoreSettings, full: bool) -> Iterator[Check]:
    cfg = settings.optimizer

    def self_fit(domain, alpha, lam, scale, stop, init):
        centers = np.linspace(stop / 60, stop, 60)
        data = uniform_empirical(centers, fitting_helper.model_density(domain, alpha, lam, scale)(centers))
        result = fitting_method.fit_rad(data, init, domain, cfg)
        label = 'fit_rad_{}_self'.format(domain)
        return [relative_check(label + '_alpha', result.params.alpha, alpha, 0.02),
                relative_check(label + '_lambda', result.params.lam, lam, 0.05)]

    for domain, alpha, lam, scale, stop, init in ((fitting_helper.POWER, 1.75, 1.25, 1.0, 8.0, None),
                                                  (fitting_helper.ENVELOPE, 2.5, 1.6, 1.0, 4.0, (2.0, 2.0, 1.0))):
        fits = {}

        def parameter(index, domain=domain, alpha=alpha, lam=lam, scale=scale, stop=stop, init=init, fits=fits):
            if 'results' not in fits:
                fits['results'] = self_fit(domain, alpha, lam, scale, stop, init)
            return fits['results'][index]

        yield 'fit_rad_self', lambda parameter=parameter: parameter(0)
        yield 'fit_rad_self', lambda parameter=parameter: parameter(1)

    mle = {}

    def mle_parameter(index):
        if 'results' not in mle:
            alpha, lam, mean = 2.0, 1.5, 2.0
            samples = channel_sampler.sample(make_channel(alpha, lam, mean), 10 ** 5, settings.montecarlo.seed)
            result = fitting_method.fit_mle(samples, None, cfg)
            mle['results'] = [relative_check('fit_mle_alpha', result.params.alpha, alpha, 0.05),
                              relative_check('fit_mle_lambda', result.params.lam, lam, 0.15),
                              relative_check('fit_mle_mean_snr', result.scale, mean, 0.03)]
        return mle['results'][index]

    for index in range(3):
        yield 'fit_mle', lambda index=index: mle_parameter(index)

    def rad_properties():
        rng = np.random.default_rng(settings.montecarlo.seed)
        centers = np.linspace(0.05, 3.0, 60)
        worst_identity, worst_symmetry, worst_bound = 0.0, 0.0, -math.inf
        for _ in range(20):
            p = uniform_empirical(centers, rng.random(60) + 1e-3)
            q = uniform_empirical(centers, rng.random(60) + 1e-3)
            forward = rad(p, q)
            worst_identity = max(worst_identity, rad(p, p))
            worst_symmetry = max(worst_symmetry, abs(forward - rad(q, p)) / forward)
            worst_bound = max(worst_bound, forward - min(kl_divergence(p, q), kl_divergence(q, p)))
        error = max(worst_identity, worst_symmetry, worst_bound)
        return CheckResult('rad_identity_symmetry_min_kl', error, 0.0, error, 1e-12, bool(error <= 1e-12),
                           'identity {:.3g}, symmetry {:.3g}, rad - min kl {:.3g}'.format(
                               worst_identity, worst_symmetry, worst_bound))

    yield 'rad_properties', rad_properties


CHECK_GROUPS = (
    ('fox_h', _fox_h_checks),
    ('distribution', _distribution_checks),
    ('outage', _outage_checks),
    ('ber', _ber_checks),
    ('capacity', _capacity_checks),
    ('bler', _bler_checks),
    ('montecarlo', _montecarlo_checks),
    ('fitting', _fitting_checks),
)


def call(settings: CoreSettings, full: bool = False) -> List[dict]:
    """
    Runs every closed-form versus reference cross-check. The quick set samples each grid; full=True
    runs the complete grids, acceptance-size Monte-Carlo and the seed coverage study.
    A check that raises is reported as failed under its group name.
    """
    results = []
    for group, checks in CHECK_GROUPS:
        core_logger.info('Running {} checks'.format(group))
        for name, check in checks(settings, full):
            results.append(_run(name, check))

    return [asdict(result) for result in results]
