from tsvha.api.router import cli


__all__ = [
    'cli'
]
