try:
    import colorlog

    _IS_COLORLOG_AVAILABLE = True
except ImportError:
    _IS_COLORLOG_AVAILABLE = False


def is_colorlog_available() -> bool:
    return _IS_COLORLOG_AVAILABLE


try:
    import networkx

    _IS_NETWORKX_AVAILABLE = True
except ImportError:
    _IS_NETWORKX_AVAILABLE = False


def is_networkx_available() -> bool:
    return _IS_NETWORKX_AVAILABLE
