"""DNA alphabets over F4 and R, Watson-Crick complements and reversible-complement codes.

F4 symbols map to single letters in the order A, T, C, G for 0, 1, w, w^2;
R symbols map to codons via the fixed 16-entry table below.
"""

from __future__ import annotations

import itertools
from dataclasses import dataclass
from typing import Iterable, Sequence

import numpy as np

from .algebra import R_MUL, THETA, V, V1, format_r, parse_r
from .codes.code import DEFAULT_ENUM_CAP, Code, closure
from .codes.construct import combine_g
from .codes.words import Ambient
from .errors import BudgetExceeded, ParseError, PreconditionError, VerificationError
from .skewpoly import (
    SkewPoly,
    is_right_divisor_of_xn_minus_1,
    is_self_reciprocal,
    plain_divmod,
    reduce_mod,
    x_power_minus_one,
)

__all__ = [
    "LETTERS",
    "CODON_TABLE",
    "DnaStrand",
    "r_to_codon",
    "codon_to_r",
    "complement",
    "f4_complement",
    "watson_crick",
    "complement_identity_checks",
    "reverse",
    "complement_word",
    "reverse_complement",
    "reverse_complement_bits",
    "is_reversible_complement",
    "rc_criterion_r_skew",
    "rc_criterion_f4r",
    "f4_cyclic_rc_criterion",
    "emit_strands",
    "to_fasta",
    "check_hamming_constraints",
    "rc_sweep",
    "divides_xn_minus_1",
    "divisors_of_xn_minus_1",
    "generated_code",
    "word_to_strand",
]


LETTERS = "ATCG"
_WC = {"A": "T", "T": "A", "C": "G", "G": "C"}

# Transcribed entry by entry; the derived rule (codon = letter(a+b) letter(b))
# is checked against it in the tests rather than used to build it.
_CODON_TEXT = {
    "0": "AA", "v": "TT", "v+1": "AT", "1": "TA",
    "v+w": "GT", "w": "CA", "v+w^2": "CT", "w^2": "GA",
    "vw^2+1": "CG", "vw^2+w^2": "AG", "vw^2": "GG", "vw^2+w": "TG",
    "vw": "CC", "vw+w^2": "TC", "vw+w": "AC", "vw+1": "GC",
}  # fmt: skip

CODON_TABLE: dict[int, str] = {parse_r(k): c for k, c in _CODON_TEXT.items()}
_FROM_CODON = {c: x for x, c in CODON_TABLE.items()}


def r_to_codon(x: int) -> str:
    return CODON_TABLE[x]


def codon_to_r(codon: str) -> int:
    try:
        return _FROM_CODON[codon.upper()]
    except KeyError:
        raise ParseError(f"not a codon: {codon!r}") from None


def complement(x: int) -> int:
    """The unique solution of theta(x) + theta(x-bar) = v + 1, namely x + v."""
    return x ^ V


def f4_complement(a: int) -> int:
    """A<->T, C<->G under the A, T, C, G ordering: 0<->1, w<->w^2."""
    return a ^ 1


def watson_crick(strand: str) -> str:
    return "".join(_WC[ch] for ch in strand)


def complement_identity_checks() -> str:
    """Check the three complement identities on all of R; raise on any failure."""
    count = 0
    for a in range(16):
        for b in range(16):
            if complement(a ^ b) != complement(a) ^ complement(b) ^ V:
                raise VerificationError(f"(i) fails at a={format_r(a)}, b={format_r(b)}")
            count += 1
    for a in range(16):
        if complement(R_MUL[V1][a]) != R_MUL[V1][complement(a)] ^ V:
            raise VerificationError(f"(ii) fails at a={format_r(a)}")
        if complement(R_MUL[V][a]) != R_MUL[V][complement(a)]:
            raise VerificationError(f"(iii) fails at a={format_r(a)}")
        count += 2
    for a in range(16):
        if THETA[a] ^ THETA[complement(a)] != V1:
            raise VerificationError(f"complement equation fails at a={format_r(a)}")
    return f"ok, {count} identities"


# -- words ---------------------------------------------------------------------


def reverse(x: Sequence[int]) -> tuple[int, ...]:
    return tuple(reversed(x))


def complement_word(x: Sequence[int], base: str = "R") -> tuple[int, ...]:
    comp = complement if base == "R" else f4_complement
    return tuple(comp(s) for s in x)


def reverse_complement(x: Sequence[int], base: str = "R") -> tuple[int, ...]:
    return complement_word(reverse(x), base)


def reverse_complement_bits(amb: Ambient, x: int) -> int:
    """Blockwise reverse complement of a bit-encoded mixed word."""
    f4, r = amb.split(x)
    return amb.join(reverse_complement(f4, "F4"), reverse_complement(r, "R"))


def _all_words(c: Code) -> np.ndarray:
    words = np.zeros(1, dtype=np.uint64)
    for b in c.basis:
        words = np.concatenate([words, words ^ np.uint64(b)])
    return words


def _reverse_complement_array(amb: Ambient, words: np.ndarray) -> np.ndarray:
    out = np.zeros_like(words)
    for i in range(amb.alpha):
        sym = (words >> np.uint64(2 * i)) & np.uint64(3)
        out |= (sym ^ np.uint64(1)) << np.uint64(2 * (amb.alpha - 1 - i))
    base = 2 * amb.alpha
    for j in range(amb.beta):
        sym = (words >> np.uint64(base + 4 * j)) & np.uint64(15)
        out |= (sym ^ np.uint64(V)) << np.uint64(base + 4 * (amb.beta - 1 - j))
    return out


def is_reversible_complement(c: Code, cap: int = DEFAULT_ENUM_CAP) -> bool:
    """Brute force: every codeword's reverse complement lies in the code."""
    amb = c.ambient
    if c.size > cap:
        raise BudgetExceeded(f"code has 2^{c.log2_size} words, cap is {cap}")
    if amb.nbits > 64:
        from .linear import Echelon

        ech = Echelon(c.basis)
        return all(reverse_complement_bits(amb, x) in ech for x in c.iter_bits(cap))
    words = _all_words(c)
    return bool(np.isin(_reverse_complement_array(amb, words), words).all())


def _all_v_word(amb: Ambient) -> int:
    # complement of the zero word: 1 on every F4 position, v on every R position
    return amb.join((1,) * amb.alpha, (V,) * amb.beta)


def divides_xn_minus_1(g: SkewPoly, n: int) -> bool:
    """g divides X^n - 1 in F4[X] or right-divides it in F4[X, theta]."""
    g = g.to_base("F4")
    if g.is_zero():
        return False
    return plain_divmod(x_power_minus_one(n), g)[1].is_zero() or (
        is_right_divisor_of_xn_minus_1(g, n)
    )


def generated_code(g: SkewPoly, beta: int) -> Code:
    """<g> = {q g} in R[X, theta]/(X^beta - 1), built by T_theta and R-scalar closure."""
    amb = Ambient(0, beta)
    red = reduce_mod(g.to_base("R"), beta)
    return closure(amb, [amb.join((), tuple(red[i] for i in range(beta)))])


def rc_criterion_r_skew(g1: SkewPoly, g2: SkewPoly, beta: int) -> tuple[bool, Code]:
    """Self-reciprocal g = v g1 + (v+1) g2 and the all-v word in <g>; also returns <g>."""
    for name, g in (("g1", g1), ("g2", g2)):
        if not divides_xn_minus_1(g, beta):
            raise PreconditionError(f"{name} does not divide X^{beta}-1")
    g = combine_g(g1, g2)
    code = generated_code(g, beta)
    ok = is_self_reciprocal(g) and code.contains_bits(_all_v_word(code.ambient))
    return ok, code


def f4_cyclic_rc_criterion(f: SkewPoly, code: Code) -> bool:
    """Self-reciprocal f with the all-ones word (complement of zero) in the code."""
    return is_self_reciprocal(f) and code.contains_bits(_all_v_word(code.ambient))


def rc_criterion_f4r(
    f: SkewPoly, g1: SkewPoly, g2: SkewPoly, alpha: int, beta: int, ell: SkewPoly | None = None
) -> dict:
    """Componentwise criterion for the code generated by (f, 0) and (0, g).

    Returns the criterion value per block, the combined value and the brute
    force verdict on the product code, so callers can see any disagreement.
    """
    from .codes.construct import GeneratorSpec, build_from_spec, cyclic_code

    if ell is not None and not ell.is_zero():
        raise PreconditionError("the componentwise criterion needs ell = 0")
    report: dict = {}
    parts = []
    if alpha:
        _, rem = plain_divmod(x_power_minus_one(alpha), f.to_base("F4"))
        if rem.is_zero() and not f.is_zero():
            c1 = cyclic_code(f, alpha)
            report["f4"] = f4_cyclic_rc_criterion(f, c1)
            report["f4_brute_force"] = is_reversible_complement(c1)
        else:
            raise PreconditionError(f"f does not divide X^{alpha}-1")
        parts.append(report["f4"])
    if beta:
        ok, c2 = rc_criterion_r_skew(g1, g2, beta)
        report["r"] = ok
        report["r_brute_force"] = is_reversible_complement(c2)
        parts.append(ok)
    report["criterion"] = all(parts)
    product = build_from_spec(GeneratorSpec(f=f, g1=g1, g2=g2), Ambient(alpha, beta))
    report["brute_force"] = is_reversible_complement(product)
    report["agree"] = report["criterion"] == report["brute_force"]
    return report


# -- strands -------------------------------------------------------------------


@dataclass(frozen=True)
class DnaStrand:
    sequence: str
    alpha: int
    beta: int

    def __post_init__(self) -> None:
        if len(self.sequence) != self.alpha + 2 * self.beta:
            raise ValueError("strand length must be alpha + 2 beta")

    @property
    def f4_part(self) -> str:
        return self.sequence[: self.alpha]

    @property
    def r_part(self) -> str:
        return self.sequence[self.alpha :]

    def __str__(self) -> str:
        return self.sequence


def word_to_strand(amb: Ambient, x: int) -> DnaStrand:
    f4, r = amb.split(x)
    seq = "".join(LETTERS[a] for a in f4) + "".join(CODON_TABLE[b] for b in r)
    return DnaStrand(seq, amb.alpha, amb.beta)


def emit_strands(c: Code, cap: int = DEFAULT_ENUM_CAP) -> list[DnaStrand]:
    """One strand per codeword, in increasing order of the bit encoding."""
    if c.size > cap:
        raise BudgetExceeded(f"code has 2^{c.log2_size} words, cap is {cap}")
    return [word_to_strand(c.ambient, x) for x in sorted(c.iter_bits(cap))]


def to_fasta(strands: Iterable[DnaStrand]) -> str:
    return "".join(f">cw{i}\n{s.sequence}\n" for i, s in enumerate(strands))


_CODE = {ch: i for i, ch in enumerate(LETTERS)}
MAX_REPORTED = 100


def _as_array(seqs: Sequence[str]) -> np.ndarray:
    n = len(seqs[0]) if seqs else 0
    arr = np.zeros((len(seqs), n), dtype=np.uint8)
    for i, s in enumerate(seqs):
        arr[i] = [_CODE[ch] for ch in s]
    return arr


def check_hamming_constraints(
    strands: Sequence[DnaStrand | str], d: int, max_pairs: int = 1 << 26, strict: bool = False
) -> dict:
    """Pairwise distance and complement-vs-reverse constraints.

    Pairs (i, j) with wt_H(x_i, x_j) < d are counted for i < j.  Pairs with
    wt_H(x_i^c, (x_j)_rev) < d are counted for all i, j.  By default a pair
    where x_j is exactly the reverse complement of x_i is not a violation:
    a reversible-complement code contains every such partner by design, so
    they are counted separately as ``rc_partner_pairs``.  With ``strict``
    only self pairs of strands equal to their own reverse complement (the
    fixed points) are exempt.  At most ``MAX_REPORTED`` pairs of each kind
    are listed.
    """
    seqs = [str(s) for s in strands]
    if len({len(s) for s in seqs}) > 1:
        raise PreconditionError("strands must have equal length")
    m = len(seqs)
    if m * m > max_pairs:
        raise BudgetExceeded(f"{m} strands give {m * m} pairs, budget is {max_pairs}")
    arr = _as_array(seqs)
    comp = arr ^ 1  # A<->T, C<->G in the A, T, C, G coding
    rev = arr[:, ::-1]
    fixed = np.flatnonzero((comp == rev).all(axis=1))
    dist_pairs: list[list[int]] = []
    hyb_pairs: list[list[int]] = []
    n_dist = n_hyb = n_partner = 0
    chunk = max(1, (1 << 22) // max(1, m * arr.shape[1]))
    cols = np.arange(m)
    for start in range(0, m, chunk):
        rows = np.arange(start, min(m, start + chunk))
        dd = (arr[rows, None, :] != arr[None, :, :]).sum(axis=2)
        bad = (dd < d) & (rows[:, None] < cols[None, :])
        hh = (comp[rows, None, :] != rev[None, :, :]).sum(axis=2)
        partners = hh == 0
        n_partner += int(partners.sum())
        if strict:
            hbad = hh < d
            for i in np.intersect1d(rows, fixed):
                hbad[i - start, i] = False
        else:
            hbad = (hh < d) & ~partners
        n_dist += int(bad.sum())
        n_hyb += int(hbad.sum())
        for pairs, mask in ((dist_pairs, bad), (hyb_pairs, hbad)):
            if len(pairs) < MAX_REPORTED:
                ii, jj = np.nonzero(mask)
                for i, j in zip(ii[: MAX_REPORTED - len(pairs)], jj):
                    pairs.append([int(i) + start, int(j)])
    return {
        "d": d,
        "strands": m,
        "distance_violation_count": n_dist,
        "hybridization_violation_count": n_hyb,
        "distance_violations": dist_pairs,
        "hybridization_violations": hyb_pairs,
        "fixed_points": [int(i) for i in fixed],
        "rc_partner_pairs": n_partner,
        "strict": strict,
        "passed": n_dist == 0 and n_hyb == 0,
    }


def divisors_of_xn_minus_1(n: int) -> list[SkewPoly]:
    """Monic divisors of X^n - 1 in F4[X] together with its monic skew right divisors."""
    from .skewpoly import all_monic_right_divisors

    found = set(all_monic_right_divisors(n, "F4", max_degree=n))
    for deg in range(n + 1):
        for low in itertools.product(range(4), repeat=deg):
            p = SkewPoly(low + (1,), "F4")
            if plain_divmod(x_power_minus_one(n), p)[1].is_zero():
                found.add(p)
    return sorted(found, key=lambda p: (p.degree, p.coeffs[::-1]))


def rc_sweep(betas: Iterable[int] = (2, 3, 4)) -> list[dict]:
    """Criterion vs brute force for every pair of monic divisors of X^beta - 1."""
    from .skewpoly import format_poly

    rows = []
    for beta in betas:
        divs = divisors_of_xn_minus_1(beta)
        for g1 in divs:
            for g2 in divs:
                crit, code = rc_criterion_r_skew(g1, g2, beta)
                brute = is_reversible_complement(code)
                rows.append(
                    {
                        "beta": beta,
                        "g1": format_poly(g1),
                        "g2": format_poly(g2),
                        "criterion": crit,
                        "brute_force": brute,
                        "log2_size": code.log2_size,
                    }
                )
    return rows
