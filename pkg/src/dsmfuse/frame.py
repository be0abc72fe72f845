"""Frames of discernment, integrity constraints and minterm-encoded sets.

A frame of ``n`` atoms has ``2**n - 1`` Venn regions ("minterms"). Region
``s`` (for ``1 <= s < 2**n``) is the part of the diagram lying inside exactly
the atoms whose bits are set in ``s``. A set built from atoms with union and
intersection is stored as a Python int whose bit ``s`` is set when region
``s`` belongs to it. Integrity constraints become a mask of regions known to
be empty, so Shafer, free and hybrid models share one representation.
"""

from __future__ import annotations

import re
from dataclasses import dataclass, field
from functools import cached_property
from typing import Iterable, Sequence, Union

from .errors import ExprSyntaxError, UnknownAtom, ValidationError

MAX_ATOMS = 16
ATOM_RE = re.compile(r"[A-Za-z][A-Za-z0-9_]*")
EMPTY_SYMBOL = "∅"


@dataclass(frozen=True)
class FocalSet:
    """A set of Venn regions.

    ``&`` and ``|`` are intersection and union; ``<=`` is inclusion, as for
    ``frozenset``. Sort by ``.bits`` for the canonical order.
    """

    bits: int = 0

    def __and__(self, other: FocalSet) -> FocalSet:
        return FocalSet(self.bits & other.bits)

    def __or__(self, other: FocalSet) -> FocalSet:
        return FocalSet(self.bits | other.bits)

    def __bool__(self) -> bool:
        return self.bits != 0

    def __le__(self, other: FocalSet) -> bool:
        return self.bits & ~other.bits == 0

    def __ge__(self, other: FocalSet) -> bool:
        return other <= self

    def is_empty(self) -> bool:
        return self.bits == 0

    def cardinality(self) -> int:
        return bin(self.bits).count("1")

    def regions(self) -> list[int]:
        """Region numbers (atom bitmasks) contained in this set, ascending."""
        out = []
        bits = self.bits
        while bits:
            low = bits & -bits
            out.append(low.bit_length() - 1)
            bits ^= low
        return out


EMPTY = FocalSet(0)


def dsm_cardinality(x: FocalSet) -> int:
    """Number of non-empty Venn regions composing ``x`` (0 for the empty set)."""
    return x.cardinality()


@dataclass(frozen=True)
class Frame:
    atoms: tuple[str, ...]

    def __init__(self, atoms: Iterable[str]):
        atoms = tuple(atoms)
        if not 1 <= len(atoms) <= MAX_ATOMS:
            raise ValidationError(f"frame must have between 1 and {MAX_ATOMS} atoms, got {len(atoms)}")
        for name in atoms:
            if not isinstance(name, str) or not ATOM_RE.fullmatch(name):
                raise ValidationError(f"invalid atom name {name!r}")
        if len(set(atoms)) != len(atoms):
            raise ValidationError("atom names must be unique")
        object.__setattr__(self, "atoms", atoms)

    @property
    def n(self) -> int:
        return len(self.atoms)

    @property
    def universe_size(self) -> int:
        return 2 ** self.n - 1

    def index(self, name: str) -> int:
        try:
            return self.atoms.index(name)
        except ValueError:
            raise UnknownAtom(name) from None

    def region_atoms(self, region: int) -> tuple[str, ...]:
        return tuple(a for i, a in enumerate(self.atoms) if region >> i & 1)

    @cached_property
    def _atom_bits(self) -> tuple[int, ...]:
        n = self.n
        out = []
        for i in range(n):
            bits = 0
            for s in range(1, 2 ** n):
                if s >> i & 1:
                    bits |= 1 << s
            out.append(bits)
        return tuple(out)

    def atom_bits(self, i: int) -> int:
        """Unmasked bitset of atom ``i``: every region whose atom-set contains ``i``."""
        return self._atom_bits[i]


# --- set expressions ------------------------------------------------------

@dataclass(frozen=True)
class AtomExpr:
    name: str


@dataclass(frozen=True)
class AndExpr:
    left: SetExpr
    right: SetExpr


@dataclass(frozen=True)
class OrExpr:
    left: SetExpr
    right: SetExpr


SetExpr = Union[AtomExpr, AndExpr, OrExpr]

_TOKEN_RE = re.compile(r"([A-Za-z][A-Za-z0-9_]*)|(\S)")


def _tokenize(text: str) -> list[tuple[str, str, int]]:
    tokens = []
    for m in _TOKEN_RE.finditer(text):
        if m.group(1) is not None:
            tokens.append(("atom", m.group(1), m.start()))
        elif m.group(2) in "&|()":
            tokens.append((m.group(2), m.group(2), m.start()))
        else:
            raise ExprSyntaxError(f"unexpected character {m.group(2)!r}", m.start())
    tokens.append(("end", "", len(text)))
    return tokens


class _Parser:
    # expr := term ('|' term)* ; term := factor ('&' factor)* ; factor := atom | '(' expr ')'

    def __init__(self, text: str, frame: Frame):
        self.tokens = _tokenize(text)
        self.pos = 0
        self.frame = frame

    def peek(self):
        return self.tokens[self.pos]

    def take(self, kind: str):
        tok = self.tokens[self.pos]
        if tok[0] != kind:
            found = "end of input" if tok[0] == "end" else repr(tok[1])
            raise ExprSyntaxError(f"expected {kind!r}, found {found}", tok[2])
        self.pos += 1
        return tok

    def expr(self) -> SetExpr:
        node = self.term()
        while self.peek()[0] == "|":
            self.pos += 1
            node = OrExpr(node, self.term())
        return node

    def term(self) -> SetExpr:
        node = self.factor()
        while self.peek()[0] == "&":
            self.pos += 1
            node = AndExpr(node, self.factor())
        return node

    def factor(self) -> SetExpr:
        kind, value, where = self.peek()
        if kind == "atom":
            self.pos += 1
            if value not in self.frame.atoms:
                raise UnknownAtom(value, where)
            return AtomExpr(value)
        if kind == "(":
            self.pos += 1
            node = self.expr()
            self.take(")")
            return node
        found = "end of input" if kind == "end" else repr(value)
        raise ExprSyntaxError(f"expected atom or '(', found {found}", where)


def parse_set_expr(text: str, frame: Frame) -> SetExpr:
    if not text or not text.strip():
        raise ExprSyntaxError("empty expression", 0)
    parser = _Parser(text, frame)
    node = parser.expr()
    kind, value, where = parser.peek()
    if kind != "end":
        raise ExprSyntaxError(f"unexpected {value!r}", where)
    return node


# --- models ---------------------------------------------------------------

Constraint = Union[str, Sequence[str]]


@dataclass(frozen=True)
class Model:
    """Integrity constraints of a frame as a mask of forbidden regions."""

    frame: Frame
    kind: str
    forbidden: int = 0
    constraints: tuple[tuple[str, ...], ...] = field(default=())

    @classmethod
    def free(cls, frame: Frame) -> Model:
        return cls(frame, "free", 0)

    @classmethod
    def shafer(cls, frame: Frame) -> Model:
        mask = 0
        for s in range(1, 2 ** frame.n):
            if s & (s - 1):
                mask |= 1 << s
        return cls(frame, "shafer", mask)

    @classmethod
    def hybrid(cls, frame: Frame, constraints: Iterable[Constraint]) -> Model:
        """Model where each listed atom combination has an empty intersection.

        A constraint is either a sequence of atom names or a string such as
        ``"A&C"``. Every region containing all atoms of some constraint is
        forbidden, which keeps the forbidden set closed under supersets.
        """
        normalized = []
        mask = 0
        for c in constraints:
            names = tuple(a.strip() for a in c.split("&")) if isinstance(c, str) else tuple(c)
            if not names:
                raise ValidationError("empty constraint")
            sub = 0
            for name in names:
                sub |= 1 << frame.index(name)
            for s in range(1, 2 ** frame.n):
                if s & sub == sub:
                    mask |= 1 << s
            normalized.append(tuple(a for a in frame.atoms if sub >> frame.index(a) & 1))
        return cls(frame, "hybrid", mask, tuple(normalized))

    @cached_property
    def allowed(self) -> int:
        full = (1 << (2 ** self.frame.n)) - 2
        return full & ~self.forbidden

    @property
    def theta(self) -> FocalSet:
        """The whole frame: union of all atoms."""
        return FocalSet(self.allowed)

    def atom(self, name: str) -> FocalSet:
        return FocalSet(self.frame.atom_bits(self.frame.index(name)) & self.allowed)

    def evaluate(self, expr: SetExpr) -> FocalSet:
        return FocalSet(self._eval(expr) & self.allowed)

    def _eval(self, expr: SetExpr) -> int:
        if isinstance(expr, AtomExpr):
            return self.frame.atom_bits(self.frame.index(expr.name))
        if isinstance(expr, AndExpr):
            return self._eval(expr.left) & self._eval(expr.right)
        return self._eval(expr.left) | self._eval(expr.right)

    def focal(self, text: str) -> FocalSet:
        """Parse and evaluate a set expression in one step."""
        return self.evaluate(parse_set_expr(text, self.frame))

    def display(self, x: FocalSet) -> str:
        return canonical_display(x, self.frame, self)

    def to_json(self) -> dict:
        out = {"type": self.kind}
        if self.kind == "hybrid":
            out["empty"] = ["&".join(c) for c in self.constraints]
        return out


def eval_to_focal(expr: SetExpr, frame: Frame, model: Model) -> FocalSet:
    if model.frame != frame:
        raise ValidationError("model was built for a different frame")
    return model.evaluate(expr)


def canonical_display(x: FocalSet, frame: Frame, model: Model | None = None) -> str:
    """Deterministic text for ``x`` that parses back to the same set.

    Sets reachable from atoms by union/intersection are up-closed among the
    allowed regions, so they are the union of the intersections named by
    their minimal regions. Those minimal regions are printed as ``&``-joined
    atoms, joined by ``|``; singletons come first, in frame order.
    """
    if x.is_empty():
        return EMPTY_SYMBOL
    regions = x.regions()
    minimal = [s for s in regions if not any(t != s and t & s == t for t in regions)]
    minimal.sort(key=lambda s: (bin(s).count("1"), [not (s >> i & 1) for i in range(frame.n)]))
    return "|".join("&".join(frame.region_atoms(s)) for s in minimal)
