"""Words over {s_i, x_i, y_i, z} and the generated rewriting system.

A letter is a (role, index) pair with role one of "s", "x", "y", "z"; the zero
letter z carries index 0.  A word is a tuple of letters; the empty tuple is
the monoid identity.  Rules come in five families, all strictly
length-reducing:

  A:       s_i s_j     -> s_{t(i,j)}   (the Cayley table)
  B:       x_i s_j y_k -> 1 or 0       (the coloring decides)
  C:       x_i y_j     -> 0
  Z_left:  z a         -> z            (a any non-z letter)
  Z_right: a z         -> z            (a any letter, z included)
"""

from __future__ import annotations

import json
from dataclasses import dataclass, field

from .coloring import Coloring, check_conditions, conditions_ok
from .semigroup import CayleyTable, is_associative

Letter = tuple
Word = tuple

ZERO_LETTER = ("z", 0)
EMPTY_WORD = ()
ZERO_WORD = (ZERO_LETTER,)

RULE_FAMILIES = ("A", "B", "C", "Z_left", "Z_right")


class WordSyntaxError(ValueError):
    pass


def _parse_token(tok: str, n: int) -> Letter:
    if tok == "0":
        return ZERO_LETTER
    role, digits = tok[:1], tok[1:]
    if role not in ("s", "x", "y") or not digits.isdigit():
        raise WordSyntaxError(f"unknown token {tok!r}")
    idx = int(digits)
    hi = n if role == "s" else n + 1
    if not 1 <= idx <= hi:
        raise WordSyntaxError(f"index out of range in token {tok!r} (max {role}{hi} for n={n})")
    return (role, idx)


def parse_word(text: str, n: int) -> Word:
    """Parse word syntax: whitespace-separated tokens s<i>/x<i>/y<i>, "0" for z.

    "1" denotes the empty word and is only allowed as the whole word.
    """
    tokens = text.split()
    if not tokens:
        raise WordSyntaxError("empty word text; write '1' for the identity")
    if tokens == ["1"]:
        return EMPTY_WORD
    letters = []
    for tok in tokens:
        if tok == "1":
            raise WordSyntaxError("'1' is only allowed as the whole word")
        letters.append(_parse_token(tok, n))
    return tuple(letters)


def _token(letter: Letter) -> str:
    role, idx = letter
    return "0" if role == "z" else f"{role}{idx}"


def format_word(w: Word) -> str:
    """Inverse of parse_word; the empty word prints as "1"."""
    if not w:
        return "1"
    return " ".join(_token(a) for a in w)


def alphabet(n: int, include_zero: bool = False) -> tuple:
    """All letters for order n in canonical order: s_1..s_n, x_1..x_{n+1}, y_1..y_{n+1}.

    Plain tuple comparison of letters and words matches this order, since the
    role characters sort s < x < y < z.
    """
    letters = [("s", i) for i in range(1, n + 1)]
    letters += [("x", i) for i in range(1, n + 2)]
    letters += [("y", i) for i in range(1, n + 2)]
    if include_zero:
        letters.append(ZERO_LETTER)
    return tuple(letters)


@dataclass(frozen=True)
class Rule:
    lhs: Word
    rhs: Word
    family: str

    def __post_init__(self):
        if len(self.rhs) >= len(self.lhs):
            raise ValueError(f"rule must be length-reducing: {self.lhs} -> {self.rhs}")
        if self.family not in RULE_FAMILIES:
            raise ValueError(f"unknown rule family {self.family!r}")


class NotAssociativeError(ValueError):
    """The Cayley table fails associativity; carries the first violating triple."""

    def __init__(self, triple):
        super().__init__(f"table is not associative at triple {triple}")
        self.triple = triple


class ColoringConditionError(ValueError):
    """The coloring violates one of C1..C6; carries the full condition report."""

    def __init__(self, report):
        failed = [name for name, (ok, _) in report.items() if not ok]
        super().__init__(f"coloring fails {', '.join(failed)}")
        self.report = report


@dataclass(frozen=True)
class Presentation:
    n: int
    table: CayleyTable
    coloring: Coloring
    rules: tuple
    lhs_map: dict = field(init=False, repr=False, compare=False)

    def __post_init__(self):
        object.__setattr__(self, "lhs_map", {r.lhs: r.rhs for r in self.rules})


def _generate_unchecked(table: CayleyTable, coloring: Coloring) -> Presentation:
    # Rule order is deterministic: family, then lexicographic indices.
    n = table.n
    size = n + 1
    rules = []
    for i in range(1, n + 1):
        for j in range(1, n + 1):
            rules.append(Rule((("s", i), ("s", j)), (("s", table.mul(i, j)),), "A"))
    for i in range(1, size + 1):
        for j in range(1, n + 1):
            for k in range(1, size + 1):
                rhs = EMPTY_WORD if coloring.get(i, j, k) == 1 else ZERO_WORD
                rules.append(Rule((("x", i), ("s", j), ("y", k)), rhs, "B"))
    for i in range(1, size + 1):
        for j in range(1, size + 1):
            rules.append(Rule((("x", i), ("y", j)), ZERO_WORD, "C"))
    for a in alphabet(n):
        rules.append(Rule((ZERO_LETTER, a), ZERO_WORD, "Z_left"))
    for a in alphabet(n, include_zero=True):
        rules.append(Rule((a, ZERO_LETTER), ZERO_WORD, "Z_right"))
    return Presentation(n, table, coloring, tuple(rules))


def generate_presentation(table: CayleyTable, coloring: Coloring) -> Presentation:
    """Generate the full rule set for an associative table and a valid coloring."""
    if table.n != coloring.n:
        raise ValueError(f"order mismatch: table n={table.n}, coloring n={coloring.n}")
    ok, triple = is_associative(table)
    if not ok:
        raise NotAssociativeError(triple)
    report = check_conditions(coloring)
    if not conditions_ok(report):
        raise ColoringConditionError(report)
    return _generate_unchecked(table, coloring)


def rule_counts(p: Presentation) -> dict:
    counts = {fam: 0 for fam in RULE_FAMILIES}
    for r in p.rules:
        counts[r.family] += 1
    return counts


def presentation_to_json(p: Presentation) -> str:
    """Serialize with deterministic key order; the rule list is stored explicitly."""
    data = {
        "n": p.n,
        "table": [list(row) for row in p.table.rows],
        "coloring": [[list(row) for row in plane] for plane in p.coloring.bits],
        "rules": [
            {
                "family": r.family,
                "lhs": [_token(a) for a in r.lhs],
                "rhs": [_token(a) for a in r.rhs],
            }
            for r in p.rules
        ],
    }
    return json.dumps(data, indent=1)


def presentation_from_json(text: str) -> Presentation:
    """Load a serialized presentation verbatim; stored rules are not regenerated."""
    try:
        data = json.loads(text)
    except json.JSONDecodeError as e:
        raise ValueError(f"invalid presentation JSON: {e}") from None
    try:
        n = int(data["n"])
        table = CayleyTable(n, tuple(tuple(row) for row in data["table"]))
        bits = tuple(tuple(tuple(row) for row in plane) for plane in data["coloring"])
        coloring = Coloring(n, bits)
        rules = tuple(
            Rule(
                tuple(_parse_token(t, n) for t in r["lhs"]),
                tuple(_parse_token(t, n) for t in r["rhs"]),
                r["family"],
            )
            for r in data["rules"]
        )
    except (KeyError, TypeError, IndexError) as e:
        raise ValueError(f"invalid presentation file: {e}") from None
    return Presentation(n, table, coloring, rules)
