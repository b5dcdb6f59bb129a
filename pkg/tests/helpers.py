from fractions import Fraction

from levelcone import BettiDiagram, HVector, pure_diagram

KOSZUL3 = BettiDiagram(3, {(0, 0): 1, (1, 1): 3, (2, 2): 3, (3, 3): 1})

# running example: lex ideal, maximal combination, extremely compressed combination
H_MAIN = HVector([1, 3, 6, 7, 9])
H_WLP = HVector([1, 3, 5, 6, 2])
H_LOW = HVector([16, 48, 21, 10])
H_NONLEVEL = HVector([5, 15, 18, 15])


def F(n, d=1):
    return Fraction(n, d)


def grid(codim, rows, first_row=0):
    """Build a diagram from display rows: entry (i, r) sits at (i, r + i)."""
    entries = {}
    for r, row in enumerate(rows, start=first_row):
        for i, x in enumerate(row):
            if x not in (None, "-", 0):
                entries[(i, r + i)] = Fraction(x)
    return BettiDiagram(codim, entries)


def combo(codim, terms):
    out = BettiDiagram.zero(codim)
    for q, d in terms:
        out = out + pure_diagram(d).scale(Fraction(q))
    return out


LOW_D = grid(3, [[16, "-", "-", "-"], ["-", 75, 100, "75/2"], ["-", 25, "75/2", 15], ["-", 15, 24, 10]])
LOW_B = grid(3, [[16, "-", "-", "-"], ["-", 75, 75, "-"], ["-", "-", "-", "-"], ["-", 15, 9, 10]])
NONLEVEL_D = grid(3, [[5, "-", "-", "-"], ["-", 12, 16, 6], ["-", 15, "45/2", 9], ["-", "45/2", 36, 15]])
NONLEVEL_B = grid(3, [[5, "-", "-", "-"], ["-", 12, 1, 6], ["-", "-", "-", "-"], ["-", "-", 27, 15]])
