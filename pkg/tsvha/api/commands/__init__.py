"""
CLI Commands
"""

from tsvha.api.commands.analyze import analyze_command
from tsvha.api.commands.bai import bai_command
from tsvha.api.commands.bound import bound_command
from tsvha.api.commands.ingest import ingest_command
from tsvha.api.commands.run import run_command

__all__ = [
    "analyze_command",
    "bai_command",
    "bound_command",
    "ingest_command",
    "run_command",
]
