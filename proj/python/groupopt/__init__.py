"""Optimal group size for group-lending default models.

Thin wrapper over the compiled extension. Results come back as plain dicts
with the same field names the CLI emits.
"""

try:
    from groupopt._groupopt import *  # packaged layout: extension inside the package
    from groupopt._groupopt import __doc__ as _ext_doc  # noqa: F401
except ImportError:  # in-tree builds put the extension on PYTHONPATH directly
    from _groupopt import *  # noqa: F401,F403

__version__ = "0.1.0"
