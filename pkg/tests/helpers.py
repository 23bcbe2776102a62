from paraweyl.parsing import parse_comm, parse_operator
from paraweyl.weyl import LeftIdealPresentation


def ideal(gens, n=1, p=1):
    return LeftIdealPresentation([parse_operator(g, n, p) for g in gens], n, p)


def op(text, n=1, p=1):
    return parse_operator(text, n, p)


def cp(text, p=1):
    return parse_comm(text, p)
