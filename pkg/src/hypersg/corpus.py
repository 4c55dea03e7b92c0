"""The bundled example corpus (``corpus/*.cay``)."""

from importlib import resources

from .constructions import attach_zero, brandt, holomorph
from .library import cyclic, e3, klein, symmetric, trivial, two_chain
from .semigroup import parse_semigroup

NAMES = ("z2", "z3", "z4", "klein", "s3", "e3", "2chain", "z2_zero", "brandt_z1_2", "hol_e3")


def build(name):
    """Construct a corpus member from the library (the files are generated from this)."""
    makers = {
        "z2": lambda: cyclic(2),
        "z3": lambda: cyclic(3),
        "z4": lambda: cyclic(4),
        "klein": klein,
        "s3": lambda: symmetric(3),
        "e3": e3,
        "2chain": two_chain,
        "z2_zero": lambda: attach_zero(cyclic(2)),
        "brandt_z1_2": lambda: brandt(trivial(), 2),
        "hol_e3": lambda: holomorph(e3()),
    }
    return makers[name]()


def path(name):
    return resources.files("hypersg") / "corpus" / f"{name}.cay"


def load(name):
    return parse_semigroup(path(name).read_text(encoding="utf-8"))


def load_all():
    return {name: load(name) for name in NAMES}
