import sys
import traceback
from typing import Callable

import click

from alphalomax.src.app import alphalomax_app
from alphalomax.src.app.app_logger import app_logger
from alphalomax.src.core.exceptions.ConvergenceException import ConvergenceException
from alphalomax.src.core.exceptions.DomainException import DomainException
from alphalomax.src.core.exceptions.ParameterException import ParameterException
from alphalomax.src.core.exceptions.PreconditionException import PreconditionException
from alphalomax.src.core.models.channel.channel_sampler import INVERSE_CDF, PHYSICAL
from alphalomax.src.exceptions.ParseEmpiricalException import ParseEmpiricalException
from alphalomax.src.exceptions.ReadFileException import ReadFileException
from alphalomax.src.local_launchers.local_method_launcher import LocalMethodLauncher

EXIT_NUMERIC = 1
EXIT_INVALID = 2


def _error_message(e: Exception) -> str:
    return str(e) + \
           (':' if (hasattr(e, 'description') and e.description) or (hasattr(e, 'hint') and e.hint) else '') + \
           (' {}.'.format(e.description) if hasattr(e, 'description') and e.description else '') + \
           (' {}.'.format(e.hint) if hasattr(e, 'hint') and e.hint else '')


def _launch(verbose: bool, launch: Callable[[LocalMethodLauncher], object]):
    try:
        return launch(LocalMethodLauncher(alphalomax_app.create_app(verbose)))

    except (ParameterException, DomainException, PreconditionException, ParseEmpiricalException,
            ReadFileException) as e:
        app_logger.error(_error_message(e))
        sys.exit(EXIT_INVALID)

    except ConvergenceException as e:
        app_logger.error(_error_message(e) +
                         (' Error estimate {}.'.format(e.error_estimate) if e.error_estimate is not None else ''))
        sys.exit(EXIT_NUMERIC)

    except Exception:
        app_logger.error('Unexpected error')
        if verbose:
            traceback.print_exc(file=sys.stderr)
        sys.exit(EXIT_NUMERIC)


def channel_options(function):
    function = click.option('--snr-db', '--mean-snr-db', 'snr_db', default=None,
                            help='Mean SNR in dB, a number or start:step:stop')(function)
    function = click.option('--lambda', 'lam', required=True,
                            help='Shape lambda > 1/alpha, a number or start:step:stop')(function)
    function = click.option('--alpha', required=True,
                            help='Nonlinearity alpha > 0, a number or start:step:stop')(function)
    return function


def metric_options(function):
    options = [
        click.option('--metric', type=click.Choice(['op', 'ber', 'capacity', 'bler']), required=True,
                     help='Performance metric'),
        click.option('--gamma0', type=float, default=None, help='Outage SNR threshold (linear)'),
        click.option('--rate', type=float, default=None, help='Outage target rate R0 [bits/s/Hz]'),
        click.option('--modulation', type=click.Choice(['bpsk', 'bfsk', 'msk', 'custom']), default='bpsk',
                     help='Coherent binary modulation for ber [bpsk]'),
        click.option('--phi', type=float, default=None, help='BER constant of a custom modulation'),
        click.option('--blocklength', type=int, default=None, help='Blocklength N for bler'),
        click.option('--info-bits', type=int, default=None, help='Information bits K for bler'),
    ]
    for option in reversed(options):
        function = option(function)
    return function


def output_options(function):
    function = click.option('--verbose/--quiet', default=False, help='Print or hide alphalomax logs [quiet]')(function)
    function = click.option('--out', 'output', default='', help='Output file [stdout]')(function)
    return function


@click.command(name='eval')
@click.option('--pdf', 'function', flag_value='pdf', default=True, help='SNR probability density [default]')
@click.option('--cdf', 'function', flag_value='cdf', help='SNR cumulative distribution')
@click.option('--quantile', 'function', flag_value='quantile', help='SNR quantile function')
@channel_options
@click.option('--gamma', default=None, help='SNR values for pdf/cdf, a number or start:step:stop [0:0.05:6]')
@click.option('--u', default=None, help='Probability levels for quantile, a number or start:step:stop [0:0.01:0.99]')
@output_options
def eval_command(function: str, alpha: str, lam: str, snr_db: str, gamma: str, u: str, output: str, verbose: bool):
    """Distribution functions of the instantaneous SNR."""
    snr_db = '0' if snr_db is None else snr_db
    _launch(verbose, lambda launcher: launcher.eval_local_method_launcher(function, alpha, lam, snr_db, gamma, u,
                                                                          output))


@click.command()
@metric_options
@channel_options
@output_options
def metrics(metric: str, gamma0: float, rate: float, modulation: str, phi: float, blocklength: int,
            info_bits: int, alpha: str, lam: str, snr_db: str, output: str, verbose: bool):
    """Closed-form metrics and their high-SNR asymptotes over an SNR sweep [0:2:40 dB]."""
    _launch(verbose, lambda launcher: launcher.metrics_local_method_launcher(metric, alpha, lam, snr_db, gamma0,
                                                                             rate, modulation, phi, blocklength,
                                                                             info_bits, output))


@click.command()
@metric_options
@channel_options
@click.option('--seed', type=int, default=None, help='Random seed [1]')
@click.option('--samples', type=int, default=None, help='Monte-Carlo samples per point [1000000]')
@click.option('--streams', type=int, default=None, help='Parallel streams [1]')
@click.option('--bitwise', is_flag=True, default=False, help='Simulate bit decisions for ber')
@output_options
def simulate(metric: str, gamma0: float, rate: float, modulation: str, phi: float, blocklength: int,
             info_bits: int, alpha: str, lam: str, snr_db: str, seed: int, samples: int, streams: int,
             bitwise: bool, output: str, verbose: bool):
    """Monte-Carlo estimates with standard errors and 95% intervals."""
    _launch(verbose, lambda launcher: launcher.simulate_local_method_launcher(metric, alpha, lam, snr_db, gamma0,
                                                                              rate, modulation, phi, blocklength,
                                                                              info_bits, seed, samples, streams,
                                                                              bitwise, output))


@click.command()
@click.option('--alpha', type=float, required=True, help='Nonlinearity alpha > 0')
@click.option('--lambda', 'lam', type=float, required=True, help='Shape lambda > 1/alpha')
@click.option('--snr-db', '--mean-snr-db', 'snr_db', type=float, default=0.0, help='Mean SNR in dB [0]')
@click.option('--method', type=click.Choice([INVERSE_CDF, PHYSICAL]), default=INVERSE_CDF,
              help='Sampling method [inverse_cdf]')
@click.option('--seed', type=int, default=None, help='Random seed [1]')
@click.option('--samples', type=int, default=None, help='Number of draws [1000000]')
@click.option('--streams', type=int, default=None, help='Parallel streams [1]')
@output_options
def sample(alpha: float, lam: float, snr_db: float, method: str, seed: int, samples: int, streams: int,
           output: str, verbose: bool):
    """Raw SNR draws, one snr column."""
    _launch(verbose, lambda launcher: launcher.sample_local_method_launcher(alpha, lam, snr_db, method, seed,
                                                                            samples, streams, output))


@click.command()
@click.argument('input-filename')
@click.option('--method', type=click.Choice(['rad', 'mle']), default='rad',
              help='rad: binned PDF (bin_center,density or bin_edge_low,bin_edge_high,count); '
                   'mle: raw samples (snr column) [rad]')
@click.option('--domain', type=click.Choice(['power', 'envelope']), default='power',
              help='Physical variable of a binned PDF [power]')
@click.option('--init', default=None, help='Start point alpha,lambda,scale [grid search]')
@output_options
def fit(input_filename: str, method: str, domain: str, init: str, output: str, verbose: bool):
    """Fits alpha, lambda and the scale to empirical data; prints the result as JSON."""
    _launch(verbose, lambda launcher: launcher.fit_local_method_launcher(input_filename, method, domain, init,
                                                                         output))


@click.command()
@click.option('--full', is_flag=True, default=False, help='Acceptance-size grids and sample counts')
@output_options
def validate(full: bool, output: str, verbose: bool):
    """Cross-checks every closed form against its reference; exit 0 only if all pass."""
    passed = _launch(verbose, lambda launcher: launcher.validate_local_method_launcher(full, output))
    if not passed:
        sys.exit(EXIT_NUMERIC)
