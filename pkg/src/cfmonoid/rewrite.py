"""Normal forms, critical pairs, and local confluence.

Every rule strictly reduces word length, so rewriting terminates in at most
|w| steps and local confluence of the critical pairs implies confluence.
"""

from __future__ import annotations

from dataclasses import dataclass

from .presentation import EMPTY_WORD, Presentation, Rule, Word, alphabet


def find_redex(w: Word, p: Presentation):
    """Leftmost redex, shortest lhs first on position ties.

    Returns (position, lhs, rhs) or None if w is irreducible.
    """
    m = p.lhs_map
    end = len(w)
    for pos in range(end):
        for width in (2, 3):
            if pos + width > end:
                break
            rhs = m.get(w[pos:pos + width])
            if rhs is not None:
                return pos, w[pos:pos + width], rhs
    return None


def normal_form(w: Word, p: Presentation) -> Word:
    """Reduce w to its irreducible form under the leftmost strategy."""
    m = p.lhs_map
    letters = list(w)
    pos = 0
    end = len(letters)
    while pos < end:
        width = 0
        if pos + 2 <= end:
            rhs = m.get((letters[pos], letters[pos + 1]))
            if rhs is not None:
                width = 2
            elif pos + 3 <= end:
                rhs = m.get((letters[pos], letters[pos + 1], letters[pos + 2]))
                if rhs is not None:
                    width = 3
        if width == 0:
            pos += 1
            continue
        letters[pos:pos + width] = rhs
        end = len(letters)
        # a new redex can start at most two letters back
        pos = pos - 2 if pos > 2 else 0
    return tuple(letters)


def is_normal_form(w: Word, p: Presentation) -> bool:
    """True iff no rule left-hand side occurs as a factor of w."""
    return find_redex(w, p) is None


@dataclass
class CriticalPair:
    overlap: Word
    left_reduct: Word
    right_reduct: Word
    rule_left: Rule
    rule_right: Rule
    pos_left: int
    pos_right: int
    joinable: bool | None = None


def critical_pairs(p: Presentation) -> list:
    """All minimal overlaps between rule left-hand sides.

    Covers proper suffix-prefix overlaps and containment of one lhs inside
    another; with the generated rule set only proper overlaps occur.
    """
    pairs = []
    for r1 in p.rules:
        l1 = r1.lhs
        n1 = len(l1)
        for r2 in p.rules:
            l2 = r2.lhs
            for o in range(1, min(n1, len(l2))):
                if l1[n1 - o:] == l2[:o]:
                    pairs.append(
                        CriticalPair(
                            l1 + l2[o:],
                            r1.rhs + l2[o:],
                            l1[:n1 - o] + r2.rhs,
                            r1,
                            r2,
                            0,
                            n1 - o,
                        )
                    )
            if len(l2) < n1:
                for t in range(n1 - len(l2) + 1):
                    if l1[t:t + len(l2)] == l2:
                        pairs.append(
                            CriticalPair(
                                l1,
                                r1.rhs,
                                l1[:t] + r2.rhs + l1[t + len(l2):],
                                r1,
                                r2,
                                0,
                                t,
                            )
                        )
    return pairs


def check_local_confluence(p: Presentation):
    """Join every critical pair.

    Returns (all_joinable, first_failure, pairs) with each pair's joinable
    flag filled in; first_failure is None when the system is confluent.
    """
    pairs = critical_pairs(p)
    first_bad = None
    for cp in pairs:
        cp.joinable = normal_form(cp.left_reduct, p) == normal_form(cp.right_reduct, p)
        if not cp.joinable and first_bad is None:
            first_bad = cp
    return first_bad is None, first_bad, pairs


def _extends_normal(w: Word, a) -> bool:
    # appending a to a normal form stays normal iff no factor ss, xy or xsy
    # appears at the new end
    if not w:
        return True
    b = w[-1][0]
    r = a[0]
    if b == "s" and r == "s":
        return False
    if b == "x" and r == "y":
        return False
    if b == "s" and r == "y" and len(w) >= 2 and w[-2][0] == "x":
        return False
    return True


def enumerate_normal_forms(p: Presentation, maxlen: int) -> list:
    """Nonzero normal forms of length <= maxlen, in length-lexicographic order.

    Includes the empty word, excludes the zero word; callers that need the
    zero add it themselves.
    """
    letters = alphabet(p.n)
    out = [EMPTY_WORD]
    layer = [EMPTY_WORD]
    for _ in range(maxlen):
        nxt = []
        for w in layer:
            for a in letters:
                if _extends_normal(w, a):
                    nxt.append(w + (a,))
        out.extend(nxt)
        layer = nxt
    return out
