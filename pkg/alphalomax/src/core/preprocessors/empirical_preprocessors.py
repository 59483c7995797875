from typing import TextIO, Union

import numpy as np
import pandas as pd

from alphalomax.src.core.core_logger import core_logger
from alphalomax.src.core.models.empirical.empirical_properties import EmpiricalPdf, bin_widths_from_centers
from alphalomax.src.exceptions.ParseEmpiricalException import ParseEmpiricalException
from alphalomax.utils import utils

CENTER_COLUMNS = ('bin_center', 'density')
EDGE_COLUMNS = ('bin_edge_low', 'bin_edge_high', 'count')


def _line(row_index: int) -> int:
    """File line of a data row: header on line 1."""
    return int(row_index) + 2


def load_empirical(source: Union[str, TextIO]) -> EmpiricalPdf:
    """
    Reads a binned empirical PDF from a CSV path or open stream. Two layouts are accepted:

        bin_center,density
        bin_edge_low,bin_edge_high,count

    :raise ParseEmpiricalException: unknown header, malformed or invalid rows (with line number)
    """
    try:
        if isinstance(source, str):
            raw = utils.read_data_table_from_file(source, dtype=str)
        else:
            raw = utils.read_data_table_from_stream(source, dtype=str)
    except (pd.errors.ParserError, pd.errors.EmptyDataError) as e:
        raise ParseEmpiricalException('Malformed CSV: {}'.format(e), 'Check the delimiter and the number of fields')

    return empirical_preprocessor(raw)


def empirical_preprocessor(raw: pd.DataFrame) -> EmpiricalPdf:
    raw.columns = [str(column).strip().lower() for column in raw.columns]

    if set(CENTER_COLUMNS).issubset(raw.columns):
        table = _numeric_table(raw, CENTER_COLUMNS)
        pdf = _from_centers(table)
    elif set(EDGE_COLUMNS).issubset(raw.columns):
        table = _numeric_table(raw, EDGE_COLUMNS)
        pdf = _from_edges(table)
    else:
        raise ParseEmpiricalException('Unrecognized empirical PDF header: {}'.format(','.join(raw.columns)),
                                      'Use bin_center,density or bin_edge_low,bin_edge_high,count', line=1)

    if not pdf.is_normalized():
        core_logger.warning('Empirical PDF integrates to {:.6g}; renormalizing'.format(pdf.total_mass))
        pdf = pdf.normalized()

    return pdf


def _numeric_table(raw: pd.DataFrame, columns) -> pd.DataFrame:
    if raw.empty:
        raise ParseEmpiricalException('Empirical PDF has no data rows', line=2)

    table = raw[list(columns)].apply(pd.to_numeric, errors='coerce')
    invalid = table.isna().any(axis=1) | ~np.isfinite(table).all(axis=1)
    if invalid.any():
        row = invalid.idxmax()
        raise ParseEmpiricalException('Malformed row: {}'.format(','.join(str(v) for v in raw.loc[row, list(columns)])),
                                      'Every field must be a finite number', line=_line(row))
    return table


def _first_failure(mask: pd.Series) -> int:
    return _line(mask.idxmax())


def _check_increasing(values: pd.Series, name: str) -> None:
    decreasing = values.diff() <= 0
    if decreasing.any():
        raise ParseEmpiricalException('{} must be strictly increasing'.format(name), line=_first_failure(decreasing))


def _from_centers(table: pd.DataFrame) -> EmpiricalPdf:
    negative = table['density'] < 0
    if negative.any():
        raise ParseEmpiricalException('Negative density {}'.format(table['density'][negative.idxmax()]),
                                      'Densities must be >= 0', line=_first_failure(negative))
    _check_increasing(table['bin_center'], 'bin_center')
    if len(table) < 2:
        raise ParseEmpiricalException('At least two bins are needed to derive bin widths', line=2)

    centers = table['bin_center'].to_numpy()
    return EmpiricalPdf(centers, table['density'].to_numpy(), bin_widths_from_centers(centers))


def _from_edges(table: pd.DataFrame) -> EmpiricalPdf:
    negative = table['count'] < 0
    if negative.any():
        raise ParseEmpiricalException('Negative count {}'.format(table['count'][negative.idxmax()]),
                                      'Counts must be >= 0', line=_first_failure(negative))
    empty = table['bin_edge_high'] <= table['bin_edge_low']
    if empty.any():
        raise ParseEmpiricalException('Bin upper edge must exceed the lower edge', line=_first_failure(empty))
    _check_increasing(table['bin_edge_low'], 'bin_edge_low')

    total = table['count'].sum()
    if not total > 0:
        raise ParseEmpiricalException('All counts are zero', line=2)

    widths = (table['bin_edge_high'] - table['bin_edge_low']).to_numpy()
    centers = 0.5 * (table['bin_edge_low'] + table['bin_edge_high']).to_numpy()
    return EmpiricalPdf(centers, table['count'].to_numpy() / (total * widths), widths)
