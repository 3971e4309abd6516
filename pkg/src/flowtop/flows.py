"""Combinatorial data of gradient-like flows without heteroclinic
intersections, and its validation.

A flow is described only by its ambient dimension n and the vector
c_0..c_n counting equilibria of each Morse index (optionally plus a list
of saddle-to-node connections).  With nu the number of saddles (indices
1..n-1) and mu the number of nodes (indices 0 and n), the ambient manifold
of such a flow is the dimension-n genus-g piece with

    g = (nu - mu + 2) / 2,

so a count vector is checked against the Betti numbers of that manifold:
Morse inequalities, the middle-index exclusion (an index in 2..n-2 would
give a pair of transversally crossing spheres with intersection number
+1 or -1 that vanishing middle homology forces to 0), the count laws
nu = 2g + k, mu = k + 2, and the Euler characteristic.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache
from typing import Any, Mapping

from .expressions import s_ng
from .homology import euler_characteristic, poincare_polynomial

__all__ = [
    "CheckResult",
    "Connection",
    "FlowSpec",
    "GenusError",
    "GenusNegativityError",
    "GenusParityError",
    "ObstructionResult",
    "ValidationReport",
    "check_morse_inequalities",
    "enumerate_flows",
    "flow_spec_from_json",
    "flow_spec_to_json",
    "genus_of_counts",
    "obstruction_check",
    "report_to_json",
    "validate_flow",
]


class GenusError(ValueError):
    """The pair (nu, mu) is not realized by any flow in the class."""


class GenusParityError(GenusError):
    """nu - mu is odd, so (nu - mu + 2)/2 is not an integer."""


class GenusNegativityError(GenusError):
    """nu - mu + 2 is negative, so the genus would be negative."""


@dataclass(frozen=True)
class Connection:
    """Directed edge between two labelled equilibria."""

    source: str
    target: str


@dataclass(frozen=True)
class FlowSpec:
    """Index counts of a gradient-like flow, with optional connection data.

    ``counts[i]`` is the number of equilibria of Morse index i, so the
    vector has length n + 1.  A flow on a closed manifold has at least one
    sink and one source, hence counts[0] >= 1 and counts[n] >= 1; anything
    else is rejected as malformed.  ``connections`` and ``indices`` come
    together or not at all: the indices map labels every referenced
    equilibrium with its Morse index.
    """

    n: int
    counts: tuple[int, ...]
    no_heteroclinic: bool = True
    connections: tuple[Connection, ...] | None = None
    indices: Mapping[str, int] | None = None

    def __post_init__(self):
        if not isinstance(self.n, int) or self.n < 2:
            raise ValueError(f"ambient dimension must be an integer >= 2, got {self.n!r}")
        counts = tuple(self.counts)
        if len(counts) != self.n + 1:
            raise ValueError(
                f"counts must have length n + 1 = {self.n + 1}, got {len(counts)}")
        for c in counts:
            if not isinstance(c, int) or isinstance(c, bool) or c < 0:
                raise ValueError(f"counts must be non-negative integers, got {c!r}")
        if counts[0] < 1 or counts[self.n] < 1:
            raise ValueError(
                "a gradient-like flow on a closed manifold has at least one sink "
                f"and one source: need counts[0] >= 1 and counts[{self.n}] >= 1")
        object.__setattr__(self, "counts", counts)
        if not isinstance(self.no_heteroclinic, bool):
            raise ValueError("no_heteroclinic must be a boolean")
        if (self.connections is None) != (self.indices is None):
            raise ValueError("connections and indices are optional together")
        if self.connections is not None:
            conns = tuple(self.connections)
            idx = dict(self.indices)
            for name, i in idx.items():
                if not isinstance(i, int) or isinstance(i, bool) or not 0 <= i <= self.n:
                    raise ValueError(
                        f"Morse index of {name!r} must be an integer in 0..{self.n}, got {i!r}")
            for edge in conns:
                for endpoint in (edge.source, edge.target):
                    if endpoint not in idx:
                        raise ValueError(f"connection endpoint {endpoint!r} has no Morse index")
            object.__setattr__(self, "connections", conns)
            object.__setattr__(self, "indices", idx)

    @property
    def saddle_count(self) -> int:
        return sum(self.counts[1:self.n])

    @property
    def node_count(self) -> int:
        return self.counts[0] + self.counts[self.n]


@dataclass(frozen=True)
class CheckResult:
    name: str
    passed: bool
    detail: str = ""


@dataclass(frozen=True)
class ValidationReport:
    """Outcome of validate_flow: genus, k, and one result per check."""

    genus: int | None
    k: int | None
    checks: tuple[CheckResult, ...]

    @property
    def admissible(self) -> bool:
        return all(c.passed for c in self.checks)

    def check(self, name: str) -> CheckResult:
        for c in self.checks:
            if c.name == name:
                return c
        raise KeyError(name)


@dataclass(frozen=True)
class ObstructionResult:
    """Verdict for one (dimension, Morse index, genus) combination."""

    admissible: bool
    reason: str

    @property
    def forbidden(self) -> bool:
        return not self.admissible


def genus_of_counts(nu: int, mu: int) -> int:
    """Genus (nu - mu + 2)/2 of the ambient manifold of a flow.

    Raises GenusNegativityError when nu - mu + 2 < 0 and GenusParityError
    when nu - mu is odd; genuine flows always give a non-negative integer,
    so either error certifies invalid input data.
    """
    if not isinstance(nu, int) or nu < 0:
        raise ValueError(f"saddle count must be a non-negative integer, got {nu!r}")
    if not isinstance(mu, int) or mu < 2:
        raise ValueError(f"node count must be an integer >= 2, got {mu!r}")
    s = nu - mu + 2
    if s < 0:
        raise GenusNegativityError(
            f"nu - mu + 2 = {s} is negative, no flow realizes (nu, mu) = ({nu}, {mu})")
    if s % 2:
        raise GenusParityError(
            f"nu - mu = {nu - mu} is odd, so (nu - mu + 2)/2 is not an integer")
    return s // 2


@lru_cache(maxsize=None)
def _betti_row(n: int, g: int) -> tuple[int, ...]:
    p = poincare_polynomial(s_ng(n, g))
    return tuple(p.coefficient(i) for i in range(n + 1))


def check_morse_inequalities(spec: FlowSpec, g: int) -> list[tuple[int, int, int]]:
    """Violations of c_i >= beta_i on the genus-g manifold, as (i, c_i, beta_i)."""
    row = _betti_row(spec.n, g)
    return [(i, c, b) for i, (c, b) in enumerate(zip(spec.counts, row)) if c < b]


def obstruction_check(n: int, i: int, g: int) -> ObstructionResult:
    """Whether an index-i saddle can occur at all on the genus-g manifold.

    Forbidden exactly when 2 <= i <= n-2 and the Betti numbers in degrees
    i and n-i both vanish: the closures of the saddle's invariant
    manifolds are spheres of dimensions i and n-i crossing transversally
    in the saddle alone (intersection number +1 or -1), while
    null-homologous spheres must have intersection number 0.
    """
    if not isinstance(n, int) or n < 3:
        raise ValueError(f"ambient dimension must be an integer >= 3, got {n!r}")
    if not isinstance(g, int) or g < 0:
        raise ValueError(f"genus must be a non-negative integer, got {g!r}")
    if not isinstance(i, int) or not 1 <= i <= n - 1:
        raise ValueError(f"Morse index must lie in 1..{n - 1}, got {i!r}")
    row = _betti_row(n, g)
    if 2 <= i <= n - 2 and row[i] == 0 and row[n - i] == 0:
        return ObstructionResult(
            admissible=False,
            reason=(
                f"closures of the invariant manifolds of an index-{i} saddle are "
                f"spheres of dimensions {i} and {n - i} crossing transversally in a "
                "single point, so their intersection number is +1 or -1; but both "
                f"spheres are null-homologous (beta_{i} = beta_{n - i} = 0), which "
                "forces intersection number 0"),
        )
    if i in (1, n - 1):
        reason = f"Morse index {i} lies outside the excluded middle range 2..{n - 2}"
    else:
        reason = f"middle homology does not vanish (beta_{i} = {row[i]}, beta_{n - i} = {row[n - i]})"
    if n == 3:
        reason = "the middle index range 2..n-2 is empty in dimension 3"
    return ObstructionResult(admissible=True, reason=reason)


def validate_flow(spec: FlowSpec) -> ValidationReport:
    """Run every admissibility check on a count vector.

    Individual failures land in the report; exceptions are reserved for
    malformed specs (those are rejected by the FlowSpec constructor) and
    for data that withdraws the no-heteroclinic hypothesis.
    """
    if not spec.no_heteroclinic:
        raise ValueError(
            "validation applies only to flows asserted to have no heteroclinic "
            "intersections (no_heteroclinic must be true)")
    n = spec.n
    c = spec.counts
    nu = spec.saddle_count
    mu = spec.node_count
    checks: list[CheckResult] = []

    g: int | None = None
    try:
        g = genus_of_counts(nu, mu)
        checks.append(CheckResult(
            "genus", True, f"g = {g} from (nu, mu) = ({nu}, {mu})"))
    except GenusError as exc:
        checks.append(CheckResult("genus", False, str(exc)))

    checks.append(_check_index_restriction(n, c, g))
    checks.append(_check_morse(spec, g))

    k: int | None = None
    if g is not None:
        k = mu - 2
        ok = k >= 0 and nu == 2 * g + k
        checks.append(CheckResult(
            "count_laws", ok,
            f"k = mu - 2 = {k}: nu = {nu} = 2g + k = {2 * g + k}, mu = {mu} = k + 2"))
    else:
        checks.append(CheckResult(
            "count_laws", False,
            f"no integers g >= 0, k >= 0 satisfy nu = 2g + k and mu = k + 2 "
            f"for (nu, mu) = ({nu}, {mu})"))

    checks.append(_check_euler(n, c, g))

    if spec.connections is not None:
        checks.append(_check_connections(spec))

    return ValidationReport(genus=g, k=k, checks=tuple(checks))


def _check_index_restriction(n: int, c: tuple[int, ...], g: int | None) -> CheckResult:
    if n <= 3:
        detail = (f"no saddle indices in 2..{n - 2} exist in dimension {n}; the "
                  "restriction is asserted only for dimension >= 4")
        if n == 3:
            detail += " (in dimension 3 the genus-0 case is known classically)"
        return CheckResult("index_restriction", True, detail)
    offenders = [(i, c[i]) for i in range(2, n - 1) if c[i]]
    if not offenders:
        return CheckResult(
            "index_restriction", True, f"c_i = 0 for all 2 <= i <= {n - 2}")
    parts = []
    for i, count in offenders:
        reason = obstruction_check(n, i, g if g is not None else 0).reason
        parts.append(f"c_{i} = {count}: {reason}")
    return CheckResult("index_restriction", False, "; ".join(parts))


def _check_morse(spec: FlowSpec, g: int | None) -> CheckResult:
    if g is None:
        violations = check_morse_inequalities(spec, 0)
        prefix = ("genus undefined; checked only the genus-independent bounds "
                  "(Betti numbers of the genus-0 manifold)")
        if violations:
            detail = prefix + ": " + _morse_detail(violations)
            return CheckResult("morse_inequalities", False, detail)
        return CheckResult("morse_inequalities", True, prefix)
    violations = check_morse_inequalities(spec, g)
    if violations:
        return CheckResult("morse_inequalities", False, _morse_detail(violations))
    return CheckResult(
        "morse_inequalities", True,
        f"c_i >= beta_i of the genus-{g} manifold for all 0 <= i <= {spec.n}")


def _morse_detail(violations: list[tuple[int, int, int]]) -> str:
    return "; ".join(f"c_{i} = {c} < beta_{i} = {b}" for i, c, b in violations)


def _check_euler(n: int, c: tuple[int, ...], g: int | None) -> CheckResult:
    alternating = sum(ci if i % 2 == 0 else -ci for i, ci in enumerate(c))
    if g is not None:
        expected = euler_characteristic(s_ng(n, g))
        ok = alternating == expected
        return CheckResult(
            "euler_characteristic", ok,
            f"sum(-1)^i c_i = {alternating}, Euler characteristic of the "
            f"genus-{g} manifold = {expected}")
    if n % 2 == 1:
        ok = alternating == 0
        return CheckResult(
            "euler_characteristic", ok,
            f"sum(-1)^i c_i = {alternating}; every closed odd-dimensional "
            "manifold has Euler characteristic 0")
    return CheckResult(
        "euler_characteristic", False,
        "genus undefined; the expected Euler characteristic 2 - 2g cannot be fixed")


def _check_connections(spec: FlowSpec) -> CheckResult:
    idx = spec.indices
    n = spec.n

    def is_saddle(v: str) -> bool:
        return 1 <= idx[v] <= n - 1

    problems: list[str] = []
    neighbours: dict[str, set[str]] = {}
    for edge in spec.connections:
        a, b = edge.source, edge.target
        if is_saddle(a) and is_saddle(b):
            problems.append(f"edge {a} -> {b} joins two saddles")
        neighbours.setdefault(a, set()).add(b)
        neighbours.setdefault(b, set()).add(a)
    for name in sorted(idx):
        if not is_saddle(name):
            continue
        nbrs = neighbours.get(name, set())
        sinks = sorted(v for v in nbrs if idx[v] == 0)
        sources = sorted(v for v in nbrs if idx[v] == n)
        if len(sinks) != 1 or len(sources) != 1:
            problems.append(
                f"saddle {name} must connect to exactly one sink and one source, "
                f"found sinks {sinks} and sources {sources}")
    if problems:
        return CheckResult("connections", False, "; ".join(problems))
    return CheckResult(
        "connections", True,
        "no saddle-to-saddle edges; every saddle has a unique sink and source")


def enumerate_flows(n: int, g: int, k_max: int) -> list[tuple[int, ...]]:
    """All admissible count vectors with middle entries zero, for any k <= k_max.

    The vectors satisfy c_1 + c_{n-1} = 2g + k and c_0 + c_n = k + 2 for
    some 0 <= k <= k_max, with c_0, c_n >= 1 and c_1, c_{n-1} >= g, and
    pass validate_flow.  They are combinatorially admissible: no claim is
    made that each one is realized by an actual flow.  Output is sorted
    lexicographically.
    """
    if not isinstance(n, int) or n < 4:
        raise ValueError(f"enumeration needs dimension >= 4, got {n!r}")
    if not isinstance(g, int) or g < 0:
        raise ValueError(f"genus must be a non-negative integer, got {g!r}")
    if not isinstance(k_max, int) or k_max < 0:
        raise ValueError(f"k_max must be a non-negative integer, got {k_max!r}")
    found: list[tuple[int, ...]] = []
    for k in range(k_max + 1):
        for c1 in range(g, g + k + 1):
            c_last = 2 * g + k - c1
            for c0 in range(1, k + 2):
                cn = k + 2 - c0
                counts = [0] * (n + 1)
                counts[0], counts[1], counts[n - 1], counts[n] = c0, c1, c_last, cn
                spec = FlowSpec(n=n, counts=tuple(counts))
                if validate_flow(spec).admissible:
                    found.append(tuple(counts))
    found.sort()
    return found


def flow_spec_from_json(data: Any) -> FlowSpec:
    """Build a FlowSpec from its JSON document form.

    Expected shape::

        {"n": 4, "counts": [1, 1, 0, 1, 1], "no_heteroclinic": true,
         "connections": [{"from": "s1", "to": "a1"}, ...],
         "indices": {"s1": 1, "a1": 0}}

    ``connections`` and ``indices`` are optional together and
    ``no_heteroclinic`` defaults to true.
    """
    if not isinstance(data, dict):
        raise ValueError("flow spec must be a JSON object")
    if "n" not in data:
        raise ValueError("flow spec is missing the field 'n'")
    if "counts" not in data:
        raise ValueError("flow spec is missing the field 'counts'")
    n = data["n"]
    counts = data["counts"]
    if not isinstance(n, int) or isinstance(n, bool):
        raise ValueError("field 'n' must be an integer")
    if not isinstance(counts, list):
        raise ValueError("field 'counts' must be a list of integers")
    no_het = data.get("no_heteroclinic", True)
    connections = None
    indices = None
    if "connections" in data or "indices" in data:
        raw_conns = data.get("connections")
        raw_idx = data.get("indices")
        if not isinstance(raw_conns, list) or not isinstance(raw_idx, dict):
            raise ValueError("'connections' must be a list and 'indices' an object, "
                             "and they are optional together")
        conns = []
        for entry in raw_conns:
            if not isinstance(entry, dict) or "from" not in entry or "to" not in entry:
                raise ValueError("each connection must be an object with 'from' and 'to'")
            conns.append(Connection(str(entry["from"]), str(entry["to"])))
        connections = tuple(conns)
        indices = {str(k): v for k, v in raw_idx.items()}
    return FlowSpec(n=n, counts=tuple(counts), no_heteroclinic=no_het,
                    connections=connections, indices=indices)


def flow_spec_to_json(spec: FlowSpec) -> dict:
    doc: dict[str, Any] = {
        "n": spec.n,
        "counts": list(spec.counts),
        "no_heteroclinic": spec.no_heteroclinic,
    }
    if spec.connections is not None:
        doc["connections"] = [{"from": e.source, "to": e.target} for e in spec.connections]
        doc["indices"] = dict(spec.indices)
    return doc


def report_to_json(report: ValidationReport) -> dict:
    return {
        "genus": report.genus,
        "k": report.k,
        "admissible": report.admissible,
        "checks": [
            {"name": c.name, "pass": c.passed, "detail": c.detail}
            for c in report.checks
        ],
    }


def report_from_json(data: Any) -> ValidationReport:
    """Inverse of report_to_json, used to round-trip emitted documents."""
    if not isinstance(data, dict):
        raise ValueError("validation report must be a JSON object")
    checks = tuple(
        CheckResult(entry["name"], bool(entry["pass"]), entry.get("detail", ""))
        for entry in data["checks"]
    )
    report = ValidationReport(genus=data["genus"], k=data["k"], checks=checks)
    if report.admissible != data["admissible"]:
        raise ValueError("admissible flag does not match the conjunction of checks")
    return report
