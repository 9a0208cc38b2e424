"""3-SAT toolkit: cubic continuous-time dynamics, tanh-make-break
annealing, quadratization, and discrete baselines."""

try:
    from ._aims import *  # noqa: F401,F403  (installed package layout)
except ImportError:  # build-tree layout: extension next to sys.path entry
    from _aims import *  # noqa: F401,F403
