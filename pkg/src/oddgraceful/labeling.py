"""Exact verification of the odd-graceful property.

A labeling maps vertex ids to non-negative integers; each edge gets the
absolute difference of its endpoint labels.  A labeling of a graph with q
edges is odd-graceful when the vertex labels are pairwise distinct values in
[0, 2q-1] and the induced edge labels are exactly the odd numbers
{1, 3, ..., 2q-1}.

Verification is exhaustive: every violated condition is reported, not just
the first, and violations come out in a canonical order (kind, then involved
ids) so reports diff cleanly across sweep runs.  Labelings may be partial;
unlabeled vertices become MissingVertexLabel violations rather than errors.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Dict, Optional, Tuple

from .canon import canonical_dumps
from .graphs import Graph

Labeling = Dict[int, int]

MISSING_VERTEX_LABEL = "MissingVertexLabel"
VERTEX_LABEL_OUT_OF_RANGE = "VertexLabelOutOfRange"
DUPLICATE_VERTEX_LABEL = "DuplicateVertexLabel"
EDGE_LABEL_EVEN = "EdgeLabelEven"
DUPLICATE_EDGE_LABEL = "DuplicateEdgeLabel"
MISSING_ODD_EDGE_LABEL = "MissingOddEdgeLabel"

KIND_ORDER = (
    MISSING_VERTEX_LABEL,
    VERTEX_LABEL_OUT_OF_RANGE,
    DUPLICATE_VERTEX_LABEL,
    EDGE_LABEL_EVEN,
    DUPLICATE_EDGE_LABEL,
    MISSING_ODD_EDGE_LABEL,
)
_KIND_RANK = {kind: i for i, kind in enumerate(KIND_ORDER)}


@dataclass(frozen=True)
class Violation:
    """One violated odd-graceful condition.

    vertex_ids / edge_ids identify the witnesses; label is the offending
    value where one exists.  Duplicate-label kinds carry the lexicographically
    first witness pair per duplicated value.
    """

    kind: str
    vertex_ids: Tuple[int, ...] = ()
    edge_ids: Tuple[Tuple[int, int], ...] = ()
    label: Optional[int] = None

    def sort_key(self):
        return (_KIND_RANK[self.kind], self.vertex_ids, self.edge_ids,
                -1 if self.label is None else self.label)

    def to_json_obj(self, g: Graph) -> dict:
        return {
            "kind": self.kind,
            "vertices": [str(g.tags[v]) for v in self.vertex_ids],
            "vertex_ids": list(self.vertex_ids),
            "edges": [[str(g.tags[a]), str(g.tags[b])] for a, b in self.edge_ids],
            "edge_ids": [[a, b] for a, b in self.edge_ids],
            "label": self.label,
        }

    def short(self, g: Graph) -> str:
        """Compact comma-free rendering used in sweep CSV cells.

        Tag commas are replaced by '.' so the cell never needs quoting.
        """
        def tag(v):
            return str(g.tags[v]).replace(",", ".")

        if self.kind == MISSING_VERTEX_LABEL:
            return f"{self.kind}({tag(self.vertex_ids[0])})"
        if self.kind == VERTEX_LABEL_OUT_OF_RANGE:
            return f"{self.kind}({tag(self.vertex_ids[0])}={self.label})"
        if self.kind == DUPLICATE_VERTEX_LABEL:
            a, b = self.vertex_ids
            return f"{self.kind}({tag(a)} {tag(b)} {self.label})"
        if self.kind == EDGE_LABEL_EVEN:
            a, b = self.edge_ids[0]
            return f"{self.kind}({tag(a)}-{tag(b)}={self.label})"
        return f"{self.kind}({self.label})"


@dataclass(frozen=True)
class VerificationReport:
    ok: bool
    q: int
    violations: Tuple[Violation, ...] = field(default_factory=tuple)

    def to_json_obj(self, g: Graph) -> dict:
        return {
            "ok": self.ok,
            "q": self.q,
            "violations": [v.to_json_obj(g) for v in self.violations],
        }

    def to_json(self, g: Graph) -> str:
        return canonical_dumps(self.to_json_obj(g))


def edge_label(labels: Labeling, edge: Tuple[int, int]) -> int:
    """Absolute difference of the endpoint labels of one edge."""
    a, b = edge
    if a not in labels or b not in labels:
        raise KeyError(f"edge ({a},{b}) has an unlabeled endpoint")
    return abs(labels[a] - labels[b])


def verify_odd_graceful(g: Graph, labels: Labeling) -> VerificationReport:
    """Check every odd-graceful condition and report all violations.

    The label range is [0, 2q-1]; for q = 0 only the single label 0 is in
    range, so a one-vertex graph labeled 0 passes vacuously and nothing
    larger can.  Out-of-range and duplicate vertex labels still contribute
    to edge-label computation so reports stay exhaustive.
    """
    q = g.q
    max_label = 2 * q - 1 if q > 0 else 0
    violations = []

    by_value: Dict[int, list] = {}
    for v in range(g.p):
        if v not in labels:
            violations.append(Violation(MISSING_VERTEX_LABEL, vertex_ids=(v,)))
            continue
        x = labels[v]
        if not (0 <= x <= max_label):
            violations.append(
                Violation(VERTEX_LABEL_OUT_OF_RANGE, vertex_ids=(v,), label=x))
        by_value.setdefault(x, []).append(v)

    for value in sorted(by_value):
        holders = by_value[value]
        if len(holders) > 1:
            violations.append(Violation(
                DUPLICATE_VERTEX_LABEL,
                vertex_ids=(holders[0], holders[1]),
                label=value,
            ))

    edge_values: Dict[int, list] = {}
    for a, b in g.edges:
        if a not in labels or b not in labels:
            continue
        d = abs(labels[a] - labels[b])
        if d % 2 == 0:
            violations.append(
                Violation(EDGE_LABEL_EVEN, edge_ids=((a, b),), label=d))
        edge_values.setdefault(d, []).append((a, b))

    for value in sorted(edge_values):
        holders = edge_values[value]
        if len(holders) > 1:
            violations.append(Violation(
                DUPLICATE_EDGE_LABEL,
                edge_ids=(holders[0], holders[1]),
                label=value,
            ))

    for odd in range(1, 2 * q, 2):
        if odd not in edge_values:
            violations.append(Violation(MISSING_ODD_EDGE_LABEL, label=odd))

    violations.sort(key=Violation.sort_key)
    return VerificationReport(ok=not violations, q=q, violations=tuple(violations))


def is_odd_graceful(g: Graph, labels: Labeling) -> bool:
    """Fast boolean form of verify_odd_graceful: same definition, first
    failure short-circuits, no report is built."""
    q = g.q
    max_label = 2 * q - 1 if q > 0 else 0
    seen = 0
    for v in range(g.p):
        x = labels.get(v)
        if x is None or not (0 <= x <= max_label):
            return False
        bit = 1 << x
        if seen & bit:
            return False
        seen |= bit
    used = 0
    for a, b in g.edges:
        d = labels[a] - labels[b]
        if d < 0:
            d = -d
        bit = 1 << d
        if not (d & 1) or used & bit:
            return False
        used |= bit
    return True


def complement_labeling(g: Graph, labels: Labeling) -> Labeling:
    """Map every label x to 2q-1-x.

    The transform preserves edge labels and the label range, so it is an
    involution that preserves the odd-graceful property.  Requires a total
    labeling.
    """
    top = 2 * g.q - 1
    out = {}
    for v in range(g.p):
        if v not in labels:
            raise ValueError(f"vertex {v} is unlabeled")
        out[v] = top - labels[v]
    return out


# -- file format -------------------------------------------------------------


def labeling_to_json(g: Graph, labels: Labeling) -> str:
    """Labeling file: graph fingerprint plus a label array indexed by vertex
    id, with null for unlabeled vertices."""
    arr = [labels.get(v) for v in range(g.p)]
    return canonical_dumps({"graph_fingerprint": g.fingerprint(), "labels": arr})


def labeling_from_json_obj(obj: dict) -> Tuple[str, Labeling]:
    """Parse a labeling file into (fingerprint, labels)."""
    if not isinstance(obj, dict):
        raise ValueError("labeling document must be a JSON object")
    try:
        fp = obj["graph_fingerprint"]
        arr = obj["labels"]
    except (KeyError, TypeError) as exc:
        raise ValueError(
            "labeling document needs 'graph_fingerprint' and 'labels'") from exc
    if not isinstance(arr, list):
        raise ValueError("'labels' must be an array indexed by vertex id")
    labels = {}
    for v, x in enumerate(arr):
        if x is None:
            continue
        if not isinstance(x, int) or isinstance(x, bool):
            raise ValueError(f"label at index {v} is not an integer")
        labels[v] = x
    return fp, labels
