from ._axial import *  # noqa: F401,F403
from ._axial import __doc__  # noqa: F401
