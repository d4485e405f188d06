"""
Representation ring of U_F+ on the free monoid over {a, b}.

Irreducibles are words in the letters a (the fundamental representation) and
b (its conjugate). The tensor product of two words x, y decomposes as the sum
of a*b' over all splittings x = a*c, y = conj(c)*b'.
"""
from __future__ import annotations

import logging
import math
from collections import Counter
from dataclasses import dataclass
from functools import lru_cache
from typing import Dict, Iterable, List, Tuple

from src.errors import InputError
from src.numerics import q_number

logger = logging.getLogger(__name__)

ALPHA = "a"
BETA = "b"
EMPTY_TOKEN = "e"
_SWAP = str.maketrans({ALPHA: BETA, BETA: ALPHA})


@dataclass(frozen=True, order=True)
class Word:
    letters: str = ""

    def __post_init__(self) -> None:
        bad = set(self.letters) - {ALPHA, BETA}
        if bad:
            raise InputError(f"word {self.letters!r} has letters outside {{a, b}}: {''.join(sorted(bad))}")

    @classmethod
    def parse(cls, text: str) -> "Word":
        token = text.strip().lower()
        if token == EMPTY_TOKEN:
            return cls("")
        if not token:
            raise InputError("empty word token (write 'e' for the trivial representation)")
        return cls(token)

    def __len__(self) -> int:
        return len(self.letters)

    def __add__(self, other: "Word") -> "Word":
        return Word(self.letters + other.letters)

    def __str__(self) -> str:
        return self.letters or EMPTY_TOKEN


@dataclass(frozen=True)
class FusionSum:
    """A decomposed tensor product: words with positive multiplicities."""
    terms: Tuple[Tuple[Word, int], ...]

    @classmethod
    def from_counter(cls, counts: Counter) -> "FusionSum":
        items = [(w, m) for w, m in counts.items() if m > 0]
        # longest first, then lexicographic
        items.sort(key=lambda item: (-len(item[0]), item[0].letters))
        return cls(tuple(items))

    @classmethod
    def single(cls, w: Word) -> "FusionSum":
        return cls(((w, 1),))

    def as_counter(self) -> Counter:
        return Counter(dict(self.terms))

    def multiplicity(self, w: Word) -> int:
        return dict(self.terms).get(w, 0)

    def to_list(self) -> List[List[object]]:
        return [[str(w), m] for w, m in self.terms]


@dataclass(frozen=True)
class RepParams:
    N: int
    q: float

    def __post_init__(self) -> None:
        if self.N < 2:
            raise InputError(f"N must be >= 2, got {self.N}")
        if not 0 < self.q <= 1:
            raise InputError(f"q must lie in (0,1], got {self.q}")

    @property
    def qdim_letter(self) -> float:
        return self.q + 1.0 / self.q


def conjugate(w: Word) -> Word:
    return Word(w.letters[::-1].translate(_SWAP))


def fuse(x: Word, y: Word) -> FusionSum:
    counts: Counter = Counter()
    for cut in range(len(x) + 1):
        head, tail = x.letters[:cut], Word(x.letters[cut:])
        bar = conjugate(tail).letters
        if y.letters.startswith(bar):
            counts[Word(head + y.letters[len(bar):])] += 1
    return FusionSum.from_counter(counts)


def fuse_sums(left: FusionSum, right: FusionSum) -> FusionSum:
    counts: Counter = Counter()
    for x, m in left.terms:
        for y, n in right.terms:
            for w, k in fuse(x, y).terms:
                counts[w] += m * n * k
    return FusionSum.from_counter(counts)


def alternating_word(k: int, leading: str = ALPHA) -> Word:
    """w^k: the alternating word of length k starting with `leading`."""
    if k < 0:
        raise InputError(f"alternating word length must be >= 0, got {k}")
    if leading not in (ALPHA, BETA):
        raise InputError(f"leading letter must be 'a' or 'b', got {leading!r}")
    other = leading.translate(_SWAP)
    return Word("".join(leading if i % 2 == 0 else other for i in range(k)))


@lru_cache(maxsize=4096)
def _word_dim(letters: str, letter_dim: float) -> float:
    # d(v x) = d(v) d(x) - [v ends with conj(x)] d(v minus last letter)
    if not letters:
        return 1.0
    before, current = 1.0, letter_dim
    for last, x in zip(letters, letters[1:]):
        step = current * letter_dim
        if last != x:
            step -= before
        before, current = current, step
        if math.isinf(current):
            # dimensions are positive and increasing in length
            break
    return current


def dim_word(w: Word, p: RepParams) -> float:
    return _word_dim(w.letters, float(p.N))


def qdim_word(w: Word, p: RepParams) -> float:
    return _word_dim(w.letters, p.qdim_letter)


def sum_dimension(s: FusionSum, letter_dim: float) -> float:
    return sum(m * _word_dim(w.letters, letter_dim) for w, m in s.terms)


def letter_extremes(letter: str, gamma_a: float, Gamma_a: float) -> Tuple[float, float]:
    """(gamma, Gamma) of a single letter; b has gamma = 1/Gamma(a), Gamma = 1/gamma(a)."""
    if letter == ALPHA:
        return gamma_a, Gamma_a
    if letter == BETA:
        return 1.0 / Gamma_a, 1.0 / gamma_a
    raise InputError(f"unknown letter {letter!r}")


def gamma_Gamma_alternating(n: int, leading: str, gamma_a: float, Gamma_a: float) -> Tuple[float, float]:
    """Smallest and largest eigenvalue of rho on the alternating word w^n."""
    if n < 0:
        raise InputError(f"n must be >= 0, got {n}")
    if not 0 < gamma_a <= 1 <= Gamma_a:
        raise InputError(f"need 0 < gamma <= 1 <= Gamma, got ({gamma_a}, {Gamma_a})")
    g_lead, G_lead = letter_extremes(leading, gamma_a, Gamma_a)
    g_bar, G_bar = letter_extremes(leading.translate(_SWAP), gamma_a, Gamma_a)
    m, odd = divmod(n, 2)
    return g_lead ** (m + odd) * g_bar ** m, G_lead ** (m + odd) * G_bar ** m


def un_sequence(q: float, n: int) -> Tuple[float, float, float]:
    """(gamma(U^n), Gamma(U^n), [2n+1]_q) with U^n = w^{2n}; n = 1 gives the fundamental data."""
    if not 0 < q < 1:
        raise InputError(f"q must lie in (0,1), got {q}")
    if n < 1:
        raise InputError(f"n must be >= 1, got {n}")
    if n == 1:
        return q, 1.0 / q, q + 1.0 / q
    return q ** (2 * n), q ** (-2 * n), q_number(2 * n + 1, q)


@dataclass(frozen=True)
class UnQuantityReport:
    q: float
    terms: Tuple[Tuple[int, float], ...]
    minimum: float
    limit: float
    single_factor_limit: float

    def to_dict(self) -> Dict[str, object]:
        return {
            "q": self.q,
            "terms": [[n, t] for n, t in self.terms],
            "minimum": self.minimum,
            "limit": self.limit,
            "single_factor_limit": self.single_factor_limit,
        }


def un_ratio_term(q: float, n: int) -> float:
    """
    Gamma_n / (gamma_n * bound_n^2), rewritten as ((1 - q^2)/(1 - q^(4n+2)))^2
    so large n does not overflow.
    """
    single = (1.0 - q * q) / (1.0 - q ** (4 * n + 2))
    return single * single


def un_ratio_quantity(q: float, n_max: int) -> UnQuantityReport:
    if not 0 < q < 1:
        raise InputError(f"q must lie in (0,1), got {q}")
    if n_max < 2:
        raise InputError(f"n_max must be >= 2, got {n_max}")
    terms = tuple((n, un_ratio_term(q, n)) for n in range(2, n_max + 1))
    single_limit = 1.0 - q * q
    report = UnQuantityReport(
        q=q,
        terms=terms,
        minimum=min(t for _, t in terms),
        limit=single_limit ** 2,
        single_factor_limit=single_limit,
    )
    logger.debug("un_ratio_quantity(): q=%s n_max=%d min=%.6g", q, n_max, report.minimum)
    return report


def all_words(max_length: int) -> Iterable[Word]:
    """Every word of length <= max_length, shortest first."""
    layer = [""]
    for _ in range(max_length + 1):
        yield from (Word(s) for s in layer)
        layer = [s + c for s in layer for c in (ALPHA, BETA)]
