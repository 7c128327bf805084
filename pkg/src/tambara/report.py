"""Ordered axiom-violation reports."""


class Report(list):
    """List of (axiom-name, basis-index-tuple) in a stable order."""

    def add(self, axiom, idx=()):
        self.append((axiom, tuple(idx)))

    def extend_prefixed(self, prefix, other):
        for ax, idx in other:
            self.append((f"{prefix}{ax}", idx))

    @property
    def ok(self):
        return len(self) == 0

    def axioms(self):
        seen = []
        for ax, _ in self:
            if ax not in seen:
                seen.append(ax)
        return seen

    def lines(self, limit=None):
        rows = [f"{ax} {list(idx)}" for ax, idx in self]
        return rows if limit is None else rows[:limit]


def residue_report(report, axiom, lhs, rhs, col_shape=None):
    """Record columns where two matrices disagree (one entry per column)."""
    diff = lhs - rhs
    cols = sorted({c for _, c in diff.nonzero_entries()})
    for c in cols:
        report.add(axiom, _unravel(c, col_shape))
    return report


def _unravel(c, shape):
    if not shape:
        return (c,)
    out = []
    for s in reversed(shape):
        s = max(s, 1)
        out.append(c % s)
        c //= s
    return tuple(reversed(out))
