"""
파일 입출력
"""
from dqeig.io.files import (
    atomic_write_text,
    format_trace,
    load_matrix,
    load_result,
    load_vector,
    read_trace,
    save_matrix,
    save_result,
    save_vector,
    write_trace,
)

__all__ = [
    "atomic_write_text",
    "save_matrix",
    "load_matrix",
    "save_vector",
    "load_vector",
    "save_result",
    "load_result",
    "format_trace",
    "write_trace",
    "read_trace",
]
