try:
    from ._hsvr import *  # noqa: F401,F403  (installed layout)
except ImportError:  # in-tree build with the extension directly on sys.path
    from _hsvr import *  # noqa: F401,F403
