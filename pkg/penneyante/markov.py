# -*- coding: utf-8 -*-

"""Absorbing Markov chain oracle for first occurrence probabilities."""

import fractions as _fractions

from . import strings as _strings


TOSSES = (_strings.TAILS, _strings.HEADS)


class SingularSystemError(_strings.PenneyError):
    """Singular linear system exception."""

    def __init__(self, message, *args):
        """Initialize object."""
        self.message = message


class GameChain():
    """Chain of the longest toss-history suffixes that prefix a or b."""

    def __init__(self, a, b, states, transitions):
        """Initialize object.

        Args:
            a (PatternString): first absorbing string.
            b (PatternString): second absorbing string.
            states (list): state texts, the empty state first.
            transitions (dict): state to (successor on T, successor on H).

        """
        self.a = a
        self.b = b
        self.states = states
        self.transitions = transitions

    @property
    def absorbing(self):
        """Return the two absorbing states."""
        return (str(self.a), str(self.b))

    @property
    def transient(self):
        """Return the non-absorbing states."""
        return [s for s in self.states if s not in self.absorbing]

    @property
    def state_count(self):
        """Return the total number of states."""
        return len(self.states)


def _resolve(history, targets):
    for start in range(len(history) + 1):
        tail = history[start:]
        if any(t.startswith(tail) for t in targets):
            return tail
    return ''


def build_chain(a, b):
    """Build the game chain of a against b.

    Args:
        a (PatternString): first string.
        b (PatternString): second string.

    Returns:
        the GameChain.

    Raises:
        LengthMismatchError: if the lengths differ.
        SameStringError: if a == b.

    """
    _strings.check_pair(a, b)
    targets = (str(a), str(b))

    states = ['']
    transitions = {}
    pending = ['']
    while pending:
        state = pending.pop(0)
        if state in targets:
            continue
        successors = tuple(_resolve(state + t, targets) for t in TOSSES)
        transitions[state] = successors
        for succ in successors:
            if succ not in states:
                states.append(succ)
                pending.append(succ)

    return GameChain(a, b, states, transitions)


def solve_linear_system(matrix, rhs):
    """Solve a square rational system by Gaussian elimination.

    Args:
        matrix (list): list of rows of Fractions.
        rhs (list): right hand side.

    Returns:
        the list of unknowns.

    Raises:
        SingularSystemError: if no nonzero pivot exists in a column.

    """
    size = len(matrix)
    aug = [list(row) + [value] for row, value in zip(matrix, rhs)]

    for col in range(size):
        pivot = None
        for row in range(col, size):
            if aug[row][col] != 0:
                pivot = row
                break
        if pivot is None:
            msg = 'Singular system at column {0:d}.'.format(col)
            raise SingularSystemError(msg)
        aug[col], aug[pivot] = aug[pivot], aug[col]

        for row in range(col + 1, size):
            factor = aug[row][col] / aug[col][col]
            if factor != 0:
                for k in range(col, size + 1):
                    aug[row][k] -= factor * aug[col][k]

    x = [_fractions.Fraction(0)] * size
    for row in reversed(range(size)):
        acc = aug[row][size]
        for k in range(row + 1, size):
            acc -= aug[row][k] * x[k]
        x[row] = acc / aug[row][row]
    return x


def hitting_probabilities(chain, target):
    """Return the probability of absorbing in target from every state."""
    half = _fractions.Fraction(1, 2)
    transient = chain.transient
    index = {s: i for i, s in enumerate(transient)}

    matrix = []
    rhs = []
    for state in transient:
        row = [_fractions.Fraction(0)] * len(transient)
        row[index[state]] += 1
        value = _fractions.Fraction(0)
        for succ in chain.transitions[state]:
            if succ in index:
                row[index[succ]] -= half
            elif succ == target:
                value += half
        matrix.append(row)
        rhs.append(value)

    solution = solve_linear_system(matrix, rhs)
    probs = {s: solution[index[s]] for s in transient}
    for state in chain.absorbing:
        probs[state] = _fractions.Fraction(1 if state == target else 0)
    return probs


def first_occurrence_prob(chain):
    """Return the probability that chain.a appears before chain.b."""
    return hitting_probabilities(chain, str(chain.a))['']


def oracle_win_prob(a, b):
    """Return P(a appears before b) from the absorbing chain."""
    return first_occurrence_prob(build_chain(a, b))
