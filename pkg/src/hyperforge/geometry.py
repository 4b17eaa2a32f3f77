"""Prime fields and the coordinatized affine and projective planes over them."""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from itertools import combinations

from .errors import PreconditionError
from .hypergraph import Hypergraph


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    d = 3
    while d * d <= n:
        if n % d == 0:
            return False
        d += 2
    return True


def largest_prime_at_most(x: int) -> int:
    if x < 2:
        raise PreconditionError(f"no prime at most {x}")
    while not is_prime(x):
        x -= 1
    return x


def _require_prime(q: int) -> None:
    if not isinstance(q, int) or not is_prime(q):
        raise PreconditionError(f"plane order must be prime, got {q!r}")


@dataclass(frozen=True)
class PrimeField:
    p: int

    def __post_init__(self):
        if not is_prime(self.p):
            raise PreconditionError(f"{self.p} is not prime")

    def add(self, a: int, b: int) -> int:
        return (a + b) % self.p

    def sub(self, a: int, b: int) -> int:
        return (a - b) % self.p

    def mul(self, a: int, b: int) -> int:
        return (a * b) % self.p

    def neg(self, a: int) -> int:
        return (-a) % self.p

    def inv(self, a: int) -> int:
        if a % self.p == 0:
            raise ZeroDivisionError("0 has no inverse")
        return pow(a, self.p - 2, self.p)

    def elements(self) -> range:
        return range(self.p)


@dataclass(frozen=True)
class AffinePlane:
    """AG(2, q). Point (x, y) has id ``x * q + y``.

    ``classes[s]`` for ``s < q`` holds the lines ``y = s*x + c`` (indexed by
    ``c``); ``classes[q]`` holds the verticals ``x = c``.
    """

    q: int
    points: tuple[int, ...]
    classes: tuple[tuple[frozenset[int], ...], ...]

    @property
    def lines(self) -> tuple[frozenset[int], ...]:
        return tuple(line for cls in self.classes for line in cls)

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(self.lines)


@dataclass(frozen=True)
class ProjectivePlane:
    """PG(2, q) from normalized homogeneous coordinates.

    ``coordinates[i]`` is the triple for point ``i``; line ``j`` is the set of
    points orthogonal to ``coordinates[j]`` (the plane is self-dual).
    """

    q: int
    points: tuple[int, ...]
    lines: tuple[frozenset[int], ...]
    coordinates: tuple[tuple[int, int, int], ...] = ()

    def hypergraph(self) -> Hypergraph:
        return Hypergraph(self.lines)

    @cached_property
    def incidence(self) -> dict[int, list[int]]:
        on = {p: [] for p in self.points}
        for j, line in enumerate(self.lines):
            for p in line:
                on.setdefault(p, []).append(j)
        return on


def affine_plane(q: int) -> AffinePlane:
    _require_prime(q)
    F = PrimeField(q)
    pid = lambda x, y: x * q + y  # noqa: E731
    classes = []
    for s in F.elements():
        classes.append(
            tuple(frozenset(pid(x, F.add(F.mul(s, x), c)) for x in F.elements()) for c in F.elements())
        )
    classes.append(tuple(frozenset(pid(c, y) for y in F.elements()) for c in F.elements()))
    return AffinePlane(q=q, points=tuple(range(q * q)), classes=tuple(classes))


def _normalized_triples(q: int) -> list[tuple[int, int, int]]:
    # first nonzero coordinate scaled to 1; yields (0,0,1), (0,1,*), (1,*,*)
    out = [(0, 0, 1)]
    out += [(0, 1, z) for z in range(q)]
    out += [(1, y, z) for y in range(q) for z in range(q)]
    return out


def projective_plane(q: int) -> ProjectivePlane:
    _require_prime(q)
    triples = _normalized_triples(q)
    lines = []
    for a, b, c in triples:
        lines.append(
            frozenset(i for i, (x, y, z) in enumerate(triples) if (a * x + b * y + c * z) % q == 0)
        )
    return ProjectivePlane(
        q=q, points=tuple(range(len(triples))), lines=tuple(lines), coordinates=tuple(triples)
    )


def _verify_projective(P: ProjectivePlane) -> bool:
    q = P.q
    n = q * q + q + 1
    points = set(P.points)
    if len(points) != n or len(P.lines) != n:
        return False
    if any(len(line) != q + 1 or not line <= points for line in P.lines):
        return False
    if any(len(a & b) != 1 for a, b in combinations(P.lines, 2)):
        return False
    degree = {p: 0 for p in points}
    for line in P.lines:
        for p in line:
            degree[p] += 1
    if any(d != q + 1 for d in degree.values()):
        return False
    seen: set[tuple[int, int]] = set()
    for line in P.lines:
        for pair in combinations(sorted(line), 2):
            if pair in seen:
                return False
            seen.add(pair)
    return len(seen) == n * (n - 1) // 2


def _verify_affine(A: AffinePlane) -> bool:
    q = A.q
    points = set(A.points)
    if len(points) != q * q or len(A.classes) != q + 1:
        return False
    for cls in A.classes:
        if len(cls) != q or any(len(line) != q for line in cls):
            return False
        covered = [p for line in cls for p in line]
        if len(covered) != len(set(covered)) or set(covered) != points:
            return False
    for i, j in combinations(range(q + 1), 2):
        for a in A.classes[i]:
            for b in A.classes[j]:
                if len(a & b) != 1:
                    return False
    return True


def verify_plane_axioms(plane: ProjectivePlane | AffinePlane) -> bool:
    """Check every incidence axiom by full enumeration."""
    if isinstance(plane, ProjectivePlane):
        return _verify_projective(plane)
    if isinstance(plane, AffinePlane):
        return _verify_affine(plane)
    raise TypeError(f"not a plane: {type(plane).__name__}")
