import json
import os
import sys
from typing import TextIO

import pandas as pd

from alphalomax.src.exceptions.ReadFileException import ReadFileException

FLOAT_FORMAT = '%.17g'


def read_data_table_from_file(file: str, separator: str = '', dtype=None, na_values=None) -> pd.DataFrame:
    filename, file_extension = os.path.splitext(file)
    if not separator:
        separator = _get_separator(file_extension)
    try:
        f = open(file)
    except OSError as e:
        raise ReadFileException(file, e.strerror)
    else:
        with f:
            return _read_data(f, separator, dtype, na_values)


def read_data_table_from_stream(stream: TextIO, separator: str = ',', dtype=None, na_values=None) -> pd.DataFrame:
    return _read_data(stream, separator, dtype, na_values)


def write_data_table(table: pd.DataFrame, output: str = None) -> None:
    """Writes a result table as CSV with round-trip float formatting; stdout when output is empty."""
    if not output or output == '-':
        table.to_csv(sys.stdout, index=False, float_format=FLOAT_FORMAT)
        return

    _create_parent_dir(output)
    table.to_csv(output, index=False, float_format=FLOAT_FORMAT)


def write_json(document: dict, output: str = None) -> None:
    content = json.dumps(document, indent=2, sort_keys=False)
    if not output or output == '-':
        sys.stdout.write(content + '\n')
        return

    _create_parent_dir(output)
    with open(output, 'w') as f:
        f.write(content + '\n')


def _create_parent_dir(output: str) -> None:
    parent = os.path.dirname(output)
    if parent:
        os.makedirs(parent, exist_ok=True)


def _read_data(file_stream: TextIO, separator: str, dtype=None, na_values=None) -> pd.DataFrame:
    return pd.read_csv(file_stream, sep=separator, dtype=dtype, na_values=na_values, skipinitialspace=True)


def _get_separator(mime_type_or_extension: str) -> str:
    extensions = {
        '.csv': ',',
        '.tsv': '\t',
        '.txt': '\t',
        '.tab': '\t',
    }
    default_separator = ','

    if mime_type_or_extension.lower() in extensions:
        return extensions[mime_type_or_extension.lower()]

    return default_separator
