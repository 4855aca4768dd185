"""Python surface of the plasmitm core (thin re-export of the C++ module)."""

from _plasmitm import *  # noqa: F401,F403
from _plasmitm import __doc__  # noqa: F401
