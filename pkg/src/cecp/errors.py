"""Exception types shared across the package.

The CLI maps these onto distinct exit codes, so raising the right class
matters: ConfigError for bad parameters, DataError for bad input data,
InvariantError for internal consistency failures.
"""


class ConfigError(ValueError):
    """A parameter or configuration value is invalid."""


class DataError(ValueError):
    """Input data is missing, malformed, or out of domain."""


class InvariantError(RuntimeError):
    """An internal consistency check failed; results cannot be trusted."""
