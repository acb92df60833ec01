import math



# A finite real or +inf. Convex-analysis convention: finite + inf = inf.
ExtendedReal = float

POSITIVE_INFINITY: ExtendedReal = math.inf


def extended(value: float) -> ExtendedReal:
    """Coerce a computed value to an `ExtendedReal`.

    Raises:
        ValueError: `value` is NaN or negative infinity.
    """
    value = float(value)
    if math.isnan(value):
        raise ValueError("NaN is not an extended real")
    if value == -math.inf:
        raise ValueError("-inf is not an extended real")
    return value


def extended_add(a: ExtendedReal, b: ExtendedReal) -> ExtendedReal:
    if math.isinf(a) or math.isinf(b):
        return POSITIVE_INFINITY
    return a + b
