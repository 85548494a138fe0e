"""Shared test helpers."""

from montesinos import Frac, MontesinosKnot, enumerate_skeletons


def fr(text: str) -> Frac:
    return Frac.parse(text)


def skeleton(tangle: str, *vertices: str):
    """Fetch the enumerated skeleton with the given vertex sequence, or the
    constant marker when no vertices are given."""
    t = fr(tangle)
    for sk in enumerate_skeletons(t):
        if not vertices and sk.constant:
            return sk
        if not sk.constant and sk.vertices == tuple(fr(v) for v in vertices):
            return sk
    raise AssertionError(f"no skeleton {vertices} for {tangle}")


def knot(spec: str) -> MontesinosKnot:
    return MontesinosKnot.parse(spec)


def family_spec(n: int) -> str:
    return f"-1/2,2/5,1/{n}"
