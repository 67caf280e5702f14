"""The eight pattern formalisms as immutable values, plus their textual notation.

Grammar (ASCII, whitespace-insensitive):

    perm    := digit+                      ranks <= 9, e.g. "31524"
             | int ("," int)+              general one-line notation
    pattern := "cl:" perm
             | "bv:" perm ";x={" ints? "};y={" ints? "}"
             | "m:"  perm ";r={" boxes? "}"
             | "mm:" perm [";r={" boxes? "}"] ";marks=[" region (";" region)* "]"
             | "bar:" perm ";bars={" ints "}"
             | "brt:" perm ";t={" pairs "}"
             | "iv:" perm "|" perm
    region  := "{" boxes "}" cmp int       cmp in { "<=", "=", ">=" }
    boxes   := "(" int "," int ")" ("," "(" int "," int ")")*

The optional "r=" block of "mm:" is sugar for an extra region {boxes} = 0.
Boxes are (column, row) = (position gap, value gap); gap g means strictly
between the g-th and (g+1)-th occurrence coordinate, with gap 0 and gap k
denoting the outer margins.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from typing import Union

from .perms import Perm, bruhat_leq_fast, flatten, non_inversions, perm

Box = tuple[int, int]

CMP_OPS = ("<=", "=", ">=")


def _check_subset(name: str, items: frozenset[int], k: int) -> None:
    bad = [x for x in items if not 0 <= x <= k]
    if bad:
        raise ValueError(f"{name} entries {bad} outside 0..{k}")


def _check_boxes(boxes: frozenset[Box], k: int) -> None:
    for b in boxes:
        if not (
            isinstance(b, tuple)
            and len(b) == 2
            and 0 <= b[0] <= k
            and 0 <= b[1] <= k
        ):
            raise ValueError(f"box {b} outside [0,{k}]^2")


@dataclass(frozen=True)
class ClassicalPattern:
    p: Perm

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", perm(self.p))

    @property
    def rank(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class BivincularPattern:
    """(p, X, Y): X forces position adjacencies, Y value adjacencies.

    A vincular pattern is the special case Y = {}; classical is X = Y = {}.
    0 in X anchors the occurrence at the first position, k at the last;
    likewise for Y with values.
    """

    p: Perm
    x: frozenset[int] = frozenset()
    y: frozenset[int] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", perm(self.p))
        object.__setattr__(self, "x", frozenset(self.x))
        object.__setattr__(self, "y", frozenset(self.y))
        _check_subset("x", self.x, len(self.p))
        _check_subset("y", self.y, len(self.p))

    @property
    def rank(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class MeshPattern:
    """(p, R): an occurrence must keep every shaded box free of points."""

    p: Perm
    shaded: frozenset[Box] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", perm(self.p))
        object.__setattr__(self, "shaded", frozenset(self.shaded))
        _check_boxes(self.shaded, len(self.p))

    @property
    def rank(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class MarkedRegion:
    """(boxes, cmp, threshold): #(points in the union of boxes) cmp threshold."""

    boxes: frozenset[Box]
    cmp: str
    threshold: int

    def __post_init__(self) -> None:
        object.__setattr__(self, "boxes", frozenset(self.boxes))
        if not self.boxes:
            raise ValueError("marked region needs at least one box")
        if self.cmp not in CMP_OPS:
            raise ValueError(f"comparator must be one of {CMP_OPS}, got {self.cmp!r}")
        if self.threshold < 0:
            raise ValueError("threshold must be non-negative")

    def satisfied(self, count: int) -> bool:
        if self.cmp == "<=":
            return count <= self.threshold
        if self.cmp == "=":
            return count == self.threshold
        return count >= self.threshold


@dataclass(frozen=True)
class MarkedMeshPattern:
    p: Perm
    regions: tuple[MarkedRegion, ...]

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", perm(self.p))
        object.__setattr__(self, "regions", tuple(self.regions))
        for region in self.regions:
            _check_boxes(region.boxes, len(self.p))

    @property
    def rank(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class BarredPattern:
    """Avoidance of `full` minus the bars, except where part of `full`.

    Only bars pairwise non-adjacent in position and in value are accepted;
    other barred patterns have no agreed mesh translation and are rejected.
    At least one letter must stay unbarred.
    """

    full: Perm
    bars: frozenset[int]

    def __post_init__(self) -> None:
        object.__setattr__(self, "full", perm(self.full))
        object.__setattr__(self, "bars", frozenset(self.bars))
        k = len(self.full)
        if not self.bars:
            raise ValueError("barred pattern needs at least one bar")
        _check_subset("bars", self.bars, k)
        if 0 in self.bars:
            raise ValueError("bar positions are 1-based")
        if len(self.bars) == k:
            raise ValueError("at least one letter must stay unbarred")
        spots = sorted(self.bars)
        vals = sorted(self.full[i - 1] for i in self.bars)
        for seq, what in ((spots, "positions"), (vals, "values")):
            for a, b in zip(seq, seq[1:]):
                if b == a + 1:
                    raise ValueError(f"barred letters adjacent in {what}: {a},{b}")

    @property
    def rank(self) -> int:
        return len(self.full)

    @property
    def reduced(self) -> Perm:
        return flatten([v for i, v in enumerate(self.full, start=1) if i not in self.bars])


@dataclass(frozen=True)
class BruhatRestrictedPattern:
    """(p, T): each embedding must yield a Bruhat cover for every t(a,b) in T."""

    p: Perm
    restrictions: frozenset[tuple[int, int]] = frozenset()

    def __post_init__(self) -> None:
        object.__setattr__(self, "p", perm(self.p))
        object.__setattr__(self, "restrictions", frozenset(self.restrictions))
        k = len(self.p)
        for t in self.restrictions:
            if not (isinstance(t, tuple) and len(t) == 2):
                raise ValueError(f"restriction {t} is not a pair")
            a, b = t
            if not 1 <= a < b <= k:
                raise ValueError(f"transposition ({a},{b}) out of range for rank {k}")
            if self.p[a - 1] >= self.p[b - 1]:
                raise ValueError(f"restriction ({a},{b}) needs p({a}) < p({b})")

    @property
    def rank(self) -> int:
        return len(self.p)


@dataclass(frozen=True)
class IntervalPattern:
    """[lower, upper] with lower <= upper in the reversed Bruhat order."""

    lower: Perm
    upper: Perm

    def __post_init__(self) -> None:
        object.__setattr__(self, "lower", perm(self.lower))
        object.__setattr__(self, "upper", perm(self.upper))
        if len(self.lower) != len(self.upper):
            raise ValueError("interval components must have equal rank")
        if not bruhat_leq_fast(self.lower, self.upper):
            raise ValueError(
                f"{self.lower} is not below {self.upper} in reversed Bruhat order"
            )

    @property
    def rank(self) -> int:
        return len(self.upper)

    @property
    def length_gap(self) -> int:
        return non_inversions(self.upper) - non_inversions(self.lower)


Pattern = Union[
    ClassicalPattern,
    BivincularPattern,
    MeshPattern,
    MarkedMeshPattern,
    BarredPattern,
    BruhatRestrictedPattern,
    IntervalPattern,
]


def symmetry_bivincular(pat: BivincularPattern, op: str) -> BivincularPattern:
    """The symmetry action on bivincular patterns.

    reverse -> (p^r, k-X, Y); complement -> (p^c, X, k-Y); inverse -> (p^i, Y, X).
    Avoidance transports along it: pi avoids (p,X,Y) iff apply_symmetry(pi, op)
    avoids symmetry_bivincular((p,X,Y), op).
    """
    from .perms import apply_symmetry

    k = len(pat.p)
    q = apply_symmetry(pat.p, op)
    if op == "reverse":
        return BivincularPattern(q, frozenset(k - m for m in pat.x), pat.y)
    if op == "complement":
        return BivincularPattern(q, pat.x, frozenset(k - m for m in pat.y))
    if op == "inverse":
        return BivincularPattern(q, pat.y, pat.x)
    raise ValueError(f"unknown symmetry {op!r}")


# --------------------------------------------------------------------------
# Notation


class PatternSyntaxError(ValueError):
    def __init__(self, message: str, position: int):
        super().__init__(f"{message} (at offset {position})")
        self.position = position


class _Cursor:
    def __init__(self, text: str):
        self.text = text
        self.pos = 0

    def fail(self, message: str) -> PatternSyntaxError:
        return PatternSyntaxError(message, self.pos)

    def done(self) -> bool:
        return self.pos >= len(self.text)

    def peek(self) -> str:
        return self.text[self.pos] if self.pos < len(self.text) else ""

    def take(self, literal: str) -> bool:
        if self.text.startswith(literal, self.pos):
            self.pos += len(literal)
            return True
        return False

    def expect(self, literal: str) -> None:
        if not self.take(literal):
            raise self.fail(f"expected {literal!r}")

    def integer(self) -> int:
        start = self.pos
        while self.pos < len(self.text) and self.text[self.pos].isdigit():
            self.pos += 1
        if self.pos == start:
            raise self.fail("expected an integer")
        return int(self.text[start : self.pos])

    def perm(self) -> Perm:
        start = self.pos
        first = self.integer()
        digits = self.text[start : self.pos]
        values = [first]
        while self.peek() == ",":
            save = self.pos
            self.pos += 1
            if not self.peek().isdigit():
                self.pos = save
                break
            values.append(self.integer())
        try:
            if len(values) > 1:
                return perm(values)
            return perm(int(ch) for ch in digits)
        except ValueError as exc:
            self.pos = start
            raise self.fail(str(exc))

    def int_set(self) -> frozenset[int]:
        self.expect("{")
        items: set[int] = set()
        if not self.take("}"):
            items.add(self.integer())
            while self.take(","):
                items.add(self.integer())
            self.expect("}")
        return frozenset(items)

    def box(self) -> Box:
        self.expect("(")
        a = self.integer()
        self.expect(",")
        b = self.integer()
        self.expect(")")
        return (a, b)

    def box_set(self) -> frozenset[Box]:
        self.expect("{")
        items: set[Box] = set()
        if not self.take("}"):
            items.add(self.box())
            while self.take(","):
                items.add(self.box())
            self.expect("}")
        return frozenset(items)

    def region(self) -> MarkedRegion:
        boxes = self.box_set()
        for op in ("<=", ">=", "="):
            if self.take(op):
                cmp = op
                break
        else:
            raise self.fail("expected one of <=, =, >=")
        threshold = self.integer()
        try:
            return MarkedRegion(boxes, cmp, threshold)
        except ValueError as exc:
            raise self.fail(str(exc))


def parse_pattern(text: str) -> Pattern:
    """Parse the pattern notation; raises PatternSyntaxError with an offset."""
    compact = "".join(text.split())
    cur = _Cursor(compact)
    try:
        pat = _parse_tagged(cur)
    except PatternSyntaxError:
        raise
    except ValueError as exc:
        raise PatternSyntaxError(str(exc), cur.pos) from None
    if not cur.done():
        raise cur.fail("trailing input")
    return pat


def _parse_tagged(cur: _Cursor) -> Pattern:
    if cur.take("cl:"):
        return ClassicalPattern(cur.perm())
    if cur.take("bv:"):
        p = cur.perm()
        cur.expect(";x=")
        x = cur.int_set()
        cur.expect(";y=")
        y = cur.int_set()
        return BivincularPattern(p, x, y)
    if cur.take("m:"):
        p = cur.perm()
        cur.expect(";r=")
        return MeshPattern(p, cur.box_set())
    if cur.take("mm:"):
        p = cur.perm()
        regions: list[MarkedRegion] = []
        if cur.take(";r="):
            regions.append(MarkedRegion(cur.box_set(), "=", 0))
        cur.expect(";marks=[")
        regions.append(cur.region())
        while cur.take(";"):
            regions.append(cur.region())
        cur.expect("]")
        return MarkedMeshPattern(p, tuple(regions))
    if cur.take("bar:"):
        p = cur.perm()
        cur.expect(";bars=")
        return BarredPattern(p, cur.int_set())
    if cur.take("brt:"):
        p = cur.perm()
        cur.expect(";t=")
        cur.expect("{")
        pairs: set[tuple[int, int]] = set()
        if not cur.take("}"):
            pairs.add(cur.box())
            while cur.take(","):
                pairs.add(cur.box())
            cur.expect("}")
        return BruhatRestrictedPattern(p, frozenset(pairs))
    if cur.take("iv:"):
        lower = cur.perm()
        cur.expect("|")
        upper = cur.perm()
        return IntervalPattern(lower, upper)
    raise cur.fail("expected a pattern tag cl:, bv:, m:, mm:, bar:, brt:, or iv:")


def format_perm(pi: Perm) -> str:
    """Digit form for rank <= 9, comma form beyond."""
    if len(pi) <= 9:
        return "".join(str(v) for v in pi)
    return ",".join(str(v) for v in pi)


def _format_ints(items: frozenset[int]) -> str:
    return "{" + ",".join(str(i) for i in sorted(items)) + "}"


def _format_boxes(boxes: frozenset[Box]) -> str:
    return "{" + ",".join(f"({a},{b})" for a, b in sorted(boxes)) + "}"


def format_pattern(pat: Pattern) -> str:
    """Canonical notation: sets sorted ascending; parse(format(pat)) == pat."""
    if isinstance(pat, ClassicalPattern):
        return f"cl:{format_perm(pat.p)}"
    if isinstance(pat, BivincularPattern):
        return f"bv:{format_perm(pat.p)};x={_format_ints(pat.x)};y={_format_ints(pat.y)}"
    if isinstance(pat, MeshPattern):
        return f"m:{format_perm(pat.p)};r={_format_boxes(pat.shaded)}"
    if isinstance(pat, MarkedMeshPattern):
        marks = ";".join(
            f"{_format_boxes(r.boxes)}{r.cmp}{r.threshold}" for r in pat.regions
        )
        return f"mm:{format_perm(pat.p)};marks=[{marks}]"
    if isinstance(pat, BarredPattern):
        return f"bar:{format_perm(pat.full)};bars={_format_ints(pat.bars)}"
    if isinstance(pat, BruhatRestrictedPattern):
        return f"brt:{format_perm(pat.p)};t={_format_boxes(pat.restrictions)}"
    if isinstance(pat, IntervalPattern):
        return f"iv:{format_perm(pat.lower)}|{format_perm(pat.upper)}"
    raise TypeError(f"not a pattern: {pat!r}")
