"""dB / dBm conversions used at the I/O boundary."""

import math

SECONDS_PER_YEAR = 365 * 24 * 3600.0


def db_to_linear(x_db: float) -> float:
    """``10^(x/10)``.

    >>> db_to_linear(10.0)
    10.0
    """
    return 10.0 ** (x_db / 10.0)


def linear_to_db(x: float) -> float:
    return 10.0 * math.log10(x)


def dbm_to_watts(x_dbm: float) -> float:
    """Absolute power in dBm to watts.

    >>> dbm_to_watts(0.0)
    0.001
    """
    return 10.0 ** (x_dbm / 10.0) * 1e-3


def watts_to_dbm(p_w: float) -> float:
    return 10.0 * math.log10(p_w) + 30.0


def seconds_to_years(t_s: float) -> float:
    return t_s / SECONDS_PER_YEAR
