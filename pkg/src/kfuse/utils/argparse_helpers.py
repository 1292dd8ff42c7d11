"""Methods used to augment argparse."""
import argparse


def positive_int(value):
    """Define an argument type to be a positive integer.

    Specify this as the `type` parameter to argparse's `add_argument`.

    Args:
        value (Any): The command line argument value

    Raises:
        argparse.ArgumentTypeError: The the value cannot be coerced into a positive integer.

    Returns:
        int: The argument value
    """
    try:
        intvalue = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer") from None
    if intvalue <= 0:
        raise argparse.ArgumentTypeError(f"{value} is not a positive integer")
    return intvalue


def non_negative_int(value):
    """Define an argument type to be an integer greater than or equal to zero.

    Args:
        value (Any): The command line argument value

    Raises:
        argparse.ArgumentTypeError: The the value cannot be coerced into a non-negative integer.

    Returns:
        int: The argument value
    """
    try:
        intvalue = int(value)
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value} is not a non-negative integer") from None
    if intvalue < 0:
        raise argparse.ArgumentTypeError(f"{value} is not a non-negative integer")
    return intvalue


def int_list(value):
    """Define an argument type to be a comma separated list of integers, e.g. `3,4,5`.

    Args:
        value (str): The command line argument value

    Raises:
        argparse.ArgumentTypeError: When any element is not an integer.

    Returns:
        list[int]: The parsed integers.
    """
    try:
        return [int(v) for v in value.split(",") if v.strip()]
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value} is not a comma separated list of integers") from None


def float_list(value):
    """Define an argument type to be a comma separated list of reals, e.g. `0.8,-0.8`.

    An element written `v*k` repeats `v` k times, so `0.8*10` is ten copies of 0.8.

    Args:
        value (str): The command line argument value

    Raises:
        argparse.ArgumentTypeError: When any element is not a number.

    Returns:
        list[float]: The parsed values.
    """
    try:
        values = []
        for v in value.split(","):
            if not v.strip():
                continue
            number, _, repeat = v.partition("*")
            values.extend([float(number)] * (int(repeat) if repeat.strip() else 1))
        return values
    except ValueError:
        raise argparse.ArgumentTypeError(f"{value} is not a comma separated list of numbers") from None


def str_list(value):
    """Define an argument type to be a comma separated list of words.

    Args:
        value (str): The command line argument value

    Returns:
        list[str]: The stripped, non-empty elements.
    """
    return [v.strip() for v in value.split(",") if v.strip()]
