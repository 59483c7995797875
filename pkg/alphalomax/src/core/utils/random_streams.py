from functools import partial
from multiprocessing.pool import Pool
from typing import Callable, List, Tuple

import numpy as np

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.exceptions.ParameterException import ParameterException

DEFAULT_CHUNK_SIZE = 2 ** 16


def chunk_bounds(count: int, chunk_size: int = DEFAULT_CHUNK_SIZE) -> List[Tuple[int, int]]:
    """
    Splits the sample index space [0, count) in fixed-size chunks.

    EXAMPLE:
        count = 10, chunk_size = 4

        RESULT:
        [(0, 4), (1, 4), (2, 2)]   # (chunk index, chunk length)
    """
    if count < 1:
        raise ParameterException('Sample count must be >= 1, got {}'.format(count))
    if chunk_size < 1:
        raise ParameterException('Chunk size must be >= 1, got {}'.format(chunk_size))

    full, remainder = divmod(count, chunk_size)
    chunks = [(index, chunk_size) for index in range(full)]
    if remainder:
        chunks.append((full, remainder))
    return chunks


def chunk_generator(seed: int, chunk_index: int) -> np.random.Generator:
    """Generator of one chunk, derived from (seed, chunk index) only."""
    return np.random.default_rng(np.random.SeedSequence([seed, chunk_index]))


def split_streams(chunks: list, n_streams: int) -> List[list]:
    """Contiguous runs of chunks, one per stream."""
    n_streams = max(1, min(n_streams, len(chunks)))
    bounds = np.linspace(0, len(chunks), n_streams + 1).round().astype(int)
    return [chunks[bounds[i]:bounds[i + 1]] for i in range(n_streams)]


def _run_stream(function: Callable, seed: int, chunks: list) -> list:
    return [function(seed, chunk_index, size) for chunk_index, size in chunks]


def map_chunks(function: Callable, count: int, seed: int, n_streams: int = 1,
               chunk_size: int = DEFAULT_CHUNK_SIZE) -> list:
    """
    Applies function(seed, chunk_index, size) to every chunk and returns the results in
    chunk order. Streams only decide which process runs which chunks, so the output
    does not depend on n_streams.
    """
    if seed < 0:
        raise ParameterException('Seed must be a non-negative integer, got {}'.format(seed))
    if n_streams < 1:
        raise ParameterException('Number of streams must be >= 1, got {}'.format(n_streams))

    chunks = chunk_bounds(count, chunk_size)
    streams = split_streams(chunks, n_streams)

    if len(streams) == 1:
        return _run_stream(function, seed, chunks)

    core_logger.debug('Running {} chunks on {} streams'.format(len(chunks), len(streams)))
    with Pool(processes=len(streams)) as pool:
        stream_thread = partial(_run_stream, function, seed)
        results = pool.map(stream_thread, streams)

    return [result for stream_results in results for result in stream_results]
