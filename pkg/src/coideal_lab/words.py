"""Words over x_1..x_n, extended indices, standard words and root intervals.

Letters are plain ints.  Extended indices run over 1..2n with
x_{n+r} = x_{n-r+1}; ``psi`` is the reflection identifying them.
The letter order is x_1 > x_2 > ... > x_n and a proper beginning of a
word is greater than the word itself.
"""
from __future__ import annotations

from dataclasses import dataclass
from itertools import permutations, product
from typing import Iterable, Sequence, Union

Word = tuple[int, ...]
Constitution = tuple[int, ...]
Bracket = Union[int, tuple["Bracket", "Bracket"]]


def psi(n: int, i: int) -> int:
    if not 1 <= i <= 2 * n:
        raise ValueError(f"index {i} out of range 1..{2 * n}")
    return 2 * n - i + 1


def letter(n: int, i: int) -> int:
    """The letter 1..n carried by extended index i."""
    if not 1 <= i <= 2 * n:
        raise ValueError(f"index {i} out of range 1..{2 * n}")
    return i if i <= n else 2 * n - i + 1


def _check_km(n: int, k: int, m: int) -> None:
    if not 1 <= k <= m <= 2 * n:
        raise ValueError(f"need 1 <= k <= m <= {2 * n}, got k={k}, m={m}")


def u_word(n: int, k: int, m: int) -> Word:
    """u(k,m) = x_k x_{k+1} ... x_m."""
    _check_km(n, k, m)
    return tuple(letter(n, i) for i in range(k, m + 1))


def u_word_desc(n: int, m: int, k: int) -> Word:
    """u(m,k) = x_m x_{m-1} ... x_k."""
    _check_km(n, k, m)
    return tuple(letter(n, i) for i in range(m, k - 1, -1))


def constitution(n: int, word: Iterable[int]) -> Constitution:
    c = [0] * n
    for x in word:
        c[letter(n, x) - 1] += 1
    return tuple(c)


def interval_constitution(n: int, k: int, m: int) -> Constitution:
    _check_km(n, k, m)
    return constitution(n, range(k, m + 1))


def render_word(word: Sequence[int]) -> str:
    return " ".join(f"x{x}" for x in word) if word else "1"


# --- order -------------------------------------------------------------------

def word_key(word: Sequence[int]) -> tuple[int, ...]:
    """Sort key realizing the word order (ascending key = ascending word)."""
    return tuple(-x for x in word) + (0,)


def word_gt(u: Sequence[int], v: Sequence[int]) -> bool:
    return word_key(u) > word_key(v)


def is_standard(word: Sequence[int]) -> bool:
    w = tuple(word)
    if not w:
        return False
    return all(word_gt(w, w[i:] + w[:i]) for i in range(1, len(w)))


def standard_bracketing(word: Sequence[int]) -> Bracket:
    """Shirshov alignment: split w = vw' with both standard and v shortest."""
    w = tuple(word)
    if not is_standard(w):
        raise ValueError(f"{render_word(w)} is not a standard word")
    if len(w) == 1:
        return w[0]
    for i in range(1, len(w)):
        if is_standard(w[:i]) and is_standard(w[i:]):
            return (standard_bracketing(w[:i]), standard_bracketing(w[i:]))
    raise AssertionError("standard word without a standard factorization")


def render_bracket(tree: Bracket) -> str:
    if isinstance(tree, int):
        return f"x{tree}"
    return f"[{render_bracket(tree[0])},{render_bracket(tree[1])}]"


# --- root intervals ----------------------------------------------------------

@dataclass(frozen=True, order=True)
class RootInterval:
    """The degree x_k + ... + x_m, stored in canonical form."""

    n: int
    k: int
    m: int

    def __post_init__(self):
        _check_km(self.n, self.k, self.m)

    @classmethod
    def make(cls, n: int, k: int, m: int) -> "RootInterval":
        _check_km(n, k, m)
        if m > psi(n, k):
            k, m = psi(n, m), psi(n, k)
        return cls(n, k, m)

    @property
    def constitution(self) -> Constitution:
        return interval_constitution(self.n, self.k, self.m)

    def flipped(self) -> tuple[int, int]:
        return psi(self.n, self.m), psi(self.n, self.k)

    def __str__(self) -> str:
        return f"[{self.k}:{self.m}]"


def parse_interval(n: int, text: str) -> RootInterval:
    body = text.strip().strip("[]")
    k, m = (int(x) for x in body.split(":"))
    return RootInterval.make(n, k, m)


def _sum_constitutions(n: int, parts: Iterable[tuple[int, int]]) -> Constitution:
    total = [0] * n
    for a, b in parts:
        for i, c in enumerate(interval_constitution(n, a, b)):
            total[i] += c
    return tuple(total)


def decompose_interval(n: int, target: tuple[int, int],
                       parts: Sequence[tuple[int, int]]) -> list[int] | None:
    """Order the parts (each possibly flipped) into consecutive pieces of target.

    Returns the chain k-1 = k_0 < k_1 < ... < k_r = m such that every piece
    [1+k_i : k_{i+1}] has the degree of a distinct part, or None.
    """
    k, m = target
    if _sum_constitutions(n, [target]) != _sum_constitutions(n, parts):
        raise ValueError("parts do not add up to the target degree")
    reps = []
    for a, b in parts:
        choices = {(a, b)}
        if 1 <= b <= 2 * n and 1 <= a:
            choices.add((psi(n, b), psi(n, a)))
        reps.append(sorted(choices))
    used = [False] * len(parts)
    chain = [k - 1]

    def search(pos: int) -> bool:
        if pos == m:
            return all(used)
        seen = set()
        for idx, choices in enumerate(reps):
            if used[idx] or tuple(choices) in seen:
                continue
            seen.add(tuple(choices))
            for a, b in choices:
                if a == pos + 1 and b <= m:
                    used[idx] = True
                    chain.append(b)
                    if search(b):
                        return True
                    chain.pop()
                    used[idx] = False
        return False

    return chain if search(k - 1) else None


def decompose_interval_bruteforce(n: int, target: tuple[int, int],
                                  parts: Sequence[tuple[int, int]]) -> list[int] | None:
    """Reference search over all orderings and flips."""
    k, m = target
    for order in permutations(range(len(parts))):
        for flips in product((False, True), repeat=len(parts)):
            pos, chain = k - 1, [k - 1]
            ok = True
            for idx, flip in zip(order, flips):
                a, b = parts[idx]
                if flip:
                    a, b = psi(n, b), psi(n, a)
                if a != pos + 1 or b > m:
                    ok = False
                    break
                pos = b
                chain.append(b)
            if ok and pos == m:
                return chain
    return None
