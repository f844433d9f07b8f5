"""Surfaces and the curve systems twist words are written over.

A curve system records named curves or arcs on a compact orientable
surface together with their first-homology classes (rows over a fixed
symplectic basis), the algebraic intersection pairing, and a 0/1
geometric adjacency matrix.  Three built-in systems cover the needs of
the rest of the package: the square torus pair, the twist chain on a
closed genus-g surface, and the arc row on a planar surface.
"""

from __future__ import annotations

from dataclasses import dataclass

from .errors import ParseError

NONSEPARATING = "nonseparating"
SEPARATING = "separating"
BOUNDARY_PARALLEL = "boundary_parallel"
ARC = "arc"

CURVE_KINDS = (NONSEPARATING, SEPARATING, BOUNDARY_PARALLEL, ARC)

# Kinds that never carry a homology class row.
CLASSLESS_KINDS = (ARC, BOUNDARY_PARALLEL)


@dataclass(frozen=True)
class Surface:
    """Compact orientable surface of the given genus and boundary count."""

    genus: int
    boundary: int

    def __post_init__(self) -> None:
        if self.genus < 0 or self.boundary < 0:
            raise ValueError("genus and boundary count must be nonnegative")

    @property
    def euler_characteristic(self) -> int:
        return 2 - 2 * self.genus - self.boundary


@dataclass(frozen=True)
class Curve:
    """A named curve or arc with its kind and optional homology class row."""

    name: str
    kind: str
    homology_class: tuple[int, ...] | None = None

    def __post_init__(self) -> None:
        if not self.name:
            raise ValueError("curve names must be nonempty")
        if self.kind not in CURVE_KINDS:
            raise ValueError(f"unknown curve kind {self.kind!r}, expected one of {CURVE_KINDS}")

    @property
    def is_classed(self) -> bool:
        return self.homology_class is not None


@dataclass(frozen=True)
class CurveSystem:
    """Named curves with intersection data over one surface.

    pairing and adjacency are full square matrices indexed by curve
    position; pairing rows involving a classless curve are zero by
    convention.  Construction checks shapes only; semantic invariants
    are the job of validate(), so that deliberately broken systems can
    be built and reported on.
    """

    surface: Surface
    curves: tuple[Curve, ...]
    pairing: tuple[tuple[int, ...], ...]
    adjacency: tuple[tuple[int, ...], ...]

    def __post_init__(self) -> None:
        n = len(self.curves)
        for label, matrix in (("pairing", self.pairing), ("adjacency", self.adjacency)):
            if len(matrix) != n or any(len(row) != n for row in matrix):
                raise ValueError(f"{label} must be {n}x{n} to match the curve list")

    @property
    def names(self) -> tuple[str, ...]:
        return tuple(c.name for c in self.curves)

    def index(self, name: str) -> int:
        for i, c in enumerate(self.curves):
            if c.name == name:
                return i
        # Fall back to a unique case-insensitive match, so prose
        # spellings like "a b a" address the curves named A, B.
        folded = [i for i, c in enumerate(self.curves) if c.name.lower() == name.lower()]
        if len(folded) == 1:
            return folded[0]
        raise ValueError(f"unknown curve {name!r}; system has {', '.join(self.names)}")

    def curve(self, name: str) -> Curve:
        return self.curves[self.index(name)]


def torus_system() -> CurveSystem:
    """The meridian/longitude pair a, b on the closed torus."""
    return CurveSystem(
        surface=Surface(1, 0),
        curves=(
            Curve("A", NONSEPARATING, (1, 0)),
            Curve("B", NONSEPARATING, (0, 1)),
        ),
        pairing=((0, 1), (-1, 0)),
        adjacency=((0, 1), (1, 0)),
    )


def _chain_form(g: int) -> list[list[int]]:
    """The intersection form of the chain basis: +1 on the superdiagonal."""
    n = 2 * g
    form = [[0] * n for _ in range(n)]
    for i in range(n - 1):
        form[i][i + 1] = 1
        form[i + 1][i] = -1
    return form


def chain_system(g: int) -> CurveSystem:
    """The chain c_1, ..., c_{2g+1} on a closed genus-g surface.

    Consecutive curves meet once; all others are disjoint.  The first
    2g curves are the homology basis.  The class of the last curve is
    the unique integer row orthogonal in the pairing to c_1..c_{2g-1}
    with <c_{2g}, c_{2g+1}> = +1, which works out to
    -(c_1 + c_3 + ... + c_{2g-1}).
    """
    if g < 1:
        raise ValueError("chain systems need genus >= 1")
    n = 2 * g + 1
    classes: list[tuple[int, ...]] = [
        tuple(1 if j == i else 0 for j in range(2 * g)) for i in range(2 * g)
    ]
    classes.append(tuple(-1 if j % 2 == 0 else 0 for j in range(2 * g)))
    form = _chain_form(g)

    def pair(x: tuple[int, ...], y: tuple[int, ...]) -> int:
        return sum(x[i] * form[i][j] * y[j] for i in range(2 * g) for j in range(2 * g))

    curves = tuple(Curve(f"C{i + 1}", NONSEPARATING, classes[i]) for i in range(n))
    pairing = tuple(tuple(pair(classes[i], classes[j]) for j in range(n)) for i in range(n))
    adjacency = tuple(
        tuple(1 if abs(i - j) == 1 else 0 for j in range(n)) for i in range(n)
    )
    return CurveSystem(Surface(g, 0), curves, pairing, adjacency)


def planar_arc_system(r: int) -> CurveSystem:
    """The arc row a_1, ..., a_{r-1} on a planar surface with r boundary circles.

    Arc A_i joins the i-th and (i+1)-st boundary circles; consecutive
    arcs share an endpoint circle and are recorded as adjacent.  Arcs
    carry no homology class, so the pairing is identically zero.
    """
    if r < 3:
        raise ValueError("planar arc systems need at least 3 boundary circles")
    n = r - 1
    curves = tuple(Curve(f"A{i + 1}", ARC) for i in range(n))
    zero = tuple(tuple(0 for _ in range(n)) for _ in range(n))
    adjacency = tuple(
        tuple(1 if abs(i - j) == 1 else 0 for j in range(n)) for i in range(n)
    )
    return CurveSystem(Surface(0, r), curves, zero, adjacency)


def validate(system: CurveSystem) -> str | None:
    """Checks all curve-system invariants.

    Returns None when everything holds, otherwise a message describing
    the first violation by curve name.
    """
    names = system.names
    if len(set(names)) != len(names):
        dup = next(n for i, n in enumerate(names) if n in names[:i])
        return f"duplicate curve name {dup!r}"
    width = 2 * system.surface.genus
    for c in system.curves:
        if c.kind in CLASSLESS_KINDS:
            if c.homology_class is not None:
                return f"{c.name}: {c.kind} curves carry no homology class"
        elif c.kind == SEPARATING:
            if c.homology_class is not None and any(c.homology_class):
                return f"{c.name}: separating curves must have zero homology class"
            if c.homology_class is not None and len(c.homology_class) != width:
                return f"{c.name}: homology class must have length {width}"
        else:
            if c.homology_class is None:
                return f"{c.name}: nonseparating curves need a homology class"
            if len(c.homology_class) != width:
                return f"{c.name}: homology class must have length {width}"
            if not any(c.homology_class):
                return f"{c.name}: nonseparating curves have nonzero homology class"
    n = len(system.curves)
    for i in range(n):
        for j in range(n):
            p, q = system.pairing[i][j], system.pairing[j][i]
            if p != -q:
                return (
                    f"pairing is not antisymmetric at ({names[i]}, {names[j]}): "
                    f"{p} vs {q}"
                )
            a, b = system.adjacency[i][j], system.adjacency[j][i]
            if a != b:
                return f"adjacency is not symmetric at ({names[i]}, {names[j]})"
            if a not in (0, 1):
                return f"adjacency entries must be 0 or 1, got {a} at ({names[i]}, {names[j]})"
            if i == j and a != 0:
                return f"{names[i]}: adjacency diagonal must be zero"
            ci, cj = system.curves[i], system.curves[j]
            if (not ci.is_classed or not cj.is_classed) and p != 0:
                return (
                    f"pairing must vanish at ({names[i]}, {names[j]}): "
                    "no algebraic intersection without homology classes"
                )
            if ci.is_classed and cj.is_classed and abs(p) > a:
                return (
                    f"|pairing| exceeds adjacency at ({names[i]}, {names[j]}): "
                    f"|{p}| > {a}"
                )
    return None


def builtin_system(name: str) -> CurveSystem:
    """Resolves the CLI system addresses: torus, chain:g=G, planar:r=R."""
    if name == "torus":
        return torus_system()
    head, sep, param = name.partition(":")
    if head == "chain":
        if not sep or not param.startswith("g="):
            raise ParseError(f"system {name!r}: expected chain:g=G")
        return chain_system(_int_param(name, param[2:]))
    if head == "planar":
        if not sep or not param.startswith("r="):
            raise ParseError(f"system {name!r}: expected planar:r=R")
        return planar_arc_system(_int_param(name, param[2:]))
    raise ParseError(
        f"unknown system {name!r}; expected torus, chain:g=G, or planar:r=R"
    )


def _int_param(name: str, text: str) -> int:
    try:
        return int(text)
    except ValueError:
        raise ParseError(f"system {name!r}: {text!r} is not an integer") from None
