"""Python bindings for the orbifold braid group toolkit."""

import json

from ._core import *  # noqa: F401,F403
from ._core import __version__, run_suite_json


def run_suite(name, n=0, m=2, mp=2, L=0):
    """Run a verification suite and return its report as a dict."""
    return json.loads(run_suite_json(name, n=n, m=m, mp=mp, L=L))
