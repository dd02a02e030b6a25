"""Discrete-event simulator of human-robot collaborative bricklaying.

Thin wrapper over the compiled extension. Configs travel as JSON strings;
results come back as plain dicts, so no binding types leak into callers.
"""

try:
    # Wheel layout: the extension is installed inside this package.
    from ._hrcsim import (
        ConfigError,
        default_config,
        expected_gci,
        mc_gci,
        run,
        validate_config,
    )
except ImportError:
    # Build-tree layout: the extension sits on PYTHONPATH next to the build.
    from _hrcsim import (
        ConfigError,
        default_config,
        expected_gci,
        mc_gci,
        run,
        validate_config,
    )

__all__ = [
    "ConfigError",
    "default_config",
    "expected_gci",
    "mc_gci",
    "run",
    "validate_config",
]
