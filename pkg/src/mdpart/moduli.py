"""Euler-number partition functions and the two conjecture checkers.

Everything is at the Euler specialization: virtual Hodge polynomials are
evaluated at s = t = 1, so e(Y; s^n, t^n) becomes chi(Y) for every n and the
motivic exponential of the Hilbert scheme series becomes a plethystic exponential.
"""
from __future__ import annotations

from dataclasses import dataclass, field
from typing import Callable

from .errors import InsufficientOrder, InvalidArgument, MdPartError, NoMatch
from .partitions import partition_series
from .series import (
    RationalFunction,
    SymmetryReport,
    TruncatedSeries,
    check_q_inversion_symmetry,
    pexp,
    plog,
    ps_inv,
    ps_mul,
    ps_pow,
    rational_reconstruct,
)

HOLDS = "holds-through-order"
MISMATCH = "first-mismatch"
RECONSTRUCTION_FAILED = "reconstruction-failed"
SYMMETRY_FAILED = "symmetry-failed"

RATIONALITY_NOTE = ("rationality is certified only through the checked order: a "
                    "rational function within the degree bounds reproduces every "
                    "computed coefficient; this is evidence, not a proof")


@dataclass(frozen=True)
class FibrationData:
    """(r, g, chi(X), chi(S)) for a genus-g curve fibration X -> S, plus K_X = 0."""
    r: int
    g: int
    chi_X: int = 0
    chi_S: int = 1
    ky_zero: bool = False

    def __post_init__(self):
        if self.r < 2:
            raise InvalidArgument(f"need r >= 2, got r = {self.r}")
        if self.g < 0:
            raise InvalidArgument("genus must be >= 0")
        if self.ky_zero and self.g != 1:
            raise InvalidArgument("K_X = 0 forces g = 1")

    def to_dict(self) -> dict:
        return {"r": self.r, "g": self.g, "chi_X": self.chi_X,
                "chi_S": self.chi_S, "ky_zero": self.ky_zero}


@dataclass
class ConjectureReport:
    conjecture: str
    parameters: dict
    order: int
    verdict: str
    first_mismatch: dict | None = None
    rational_function: RationalFunction | None = None
    symmetry: SymmetryReport | None = None
    pairs: list = field(default_factory=list)
    note: str | None = None

    @property
    def ok(self) -> bool:
        if self.verdict != HOLDS:
            return False
        return self.symmetry is None or self.symmetry.symmetric

    def to_dict(self) -> dict:
        d = {"conjecture": self.conjecture, "parameters": self.parameters,
             "order": self.order, "verdict": self.verdict}
        if self.first_mismatch is not None:
            d["first_mismatch"] = self.first_mismatch
        if self.rational_function is not None:
            d["rational_function"] = self.rational_function.to_dict()
        if self.symmetry is not None:
            d["symmetry"] = self.symmetry.to_dict()
        if self.pairs:
            d["pairs"] = [[str(a), str(b)] for a, b in self.pairs]
        if self.note:
            d["note"] = self.note
        return d


# ---------------------------------------------------------------------------

# (r, order, punctual) -> partition counts as a series; lets callers plug in a
# cached or parallel counter
Counter = Callable[[int, int, bool], TruncatedSeries]


def _counts(counter: Counter | None, r: int, order: int, punctual: bool) -> TruncatedSeries:
    if counter is None:
        return partition_series(r, order, punctual)
    return counter(r, order, punctual)


def h_series(r: int, order: int, counter: Counter | None = None) -> TruncatedSeries:
    """h_r(q, 1, 1): plethystic log of the punctual Hilbert scheme counts."""
    return plog(_counts(counter, r, order, False))


def c_series(r: int, order: int, counter: Counter | None = None) -> TruncatedSeries:
    """c_r(q, 1, 1): plethystic log of the punctual curve-moduli counts."""
    return plog(_counts(counter, r, order, True))


def hilbert_euler_series(r: int, chi_X: int, order: int, counter: Counter | None = None) -> TruncatedSeries:
    """sum chi(X^[n]) q^n = PExp(chi(X) h_r)."""
    return pexp(h_series(r, order, counter) * chi_X)


def punctual_ratio(r: int, order: int, counter: Counter | None = None) -> TruncatedSeries:
    """(sum P~_r(n) q^n) / (sum P_r(n) q^n)."""
    num = _counts(counter, r, order, True)
    den = _counts(counter, r, order, False)
    return ps_mul(num, ps_inv(den))


def moduli_euler_series(fd: FibrationData, order: int, counter: Counter | None = None) -> TruncatedSeries:
    hilb = hilbert_euler_series(fd.r, fd.chi_X, order, counter)
    ratio = punctual_ratio(fd.r, order, counter)
    return ps_mul(hilb, ps_pow(ratio, 2 - 2 * fd.g)) * fd.chi_S


def reduced_partition_function(fd: FibrationData, order: int, counter: Counter | None = None) -> TruncatedSeries:
    """Moduli series divided by the Hilbert series.

    Computed as the quotient of the two full series and compared against
    chi(S) * ratio^(2-2g); the two must coincide, which is what makes the
    result independent of chi(X).
    """
    hilb = hilbert_euler_series(fd.r, fd.chi_X, order, counter)
    quotient = ps_mul(moduli_euler_series(fd, order, counter), ps_inv(hilb))
    direct = ps_pow(punctual_ratio(fd.r, order, counter), 2 - 2 * fd.g) * fd.chi_S
    if quotient != direct:
        raise MdPartError("reduced partition function depends on chi_X; this is a bug")
    return quotient


def default_degree_bounds(order: int) -> tuple[int, int]:
    d = max(order // 2 - 1, 0)
    return d, d


def check_conj_euler(fd: FibrationData, order: int, num_deg: int | None = None,
                     den_deg: int | None = None, counter: Counter | None = None) -> ConjectureReport:
    """Reconstruct the reduced partition function and test q -> 1/q invariance."""
    dn, dd = default_degree_bounds(order)
    num_deg = dn if num_deg is None else num_deg
    den_deg = dd if den_deg is None else den_deg
    params = fd.to_dict() | {"num_deg": num_deg, "den_deg": den_deg}
    reduced = reduced_partition_function(fd, order, counter)
    try:
        f = rational_reconstruct(reduced, num_deg, den_deg)
    except (NoMatch, InsufficientOrder) as exc:
        return ConjectureReport("euler", params, order, RECONSTRUCTION_FAILED,
                                note=f"{exc}; {RATIONALITY_NOTE}")
    sym = check_q_inversion_symmetry(f)
    verdict = HOLDS
    # the symmetry half of the conjecture is only claimed when K_X = 0
    if fd.ky_zero and not sym.symmetric:
        verdict = SYMMETRY_FAILED
    return ConjectureReport("euler", params, order, verdict,
                            rational_function=f, symmetry=sym, note=RATIONALITY_NOTE)


def check_PWP(r: int, order: int, counter: Counter | None = None) -> ConjectureReport:
    """Compare sum P~_r q^n with (sum P_r q^n) / (1-q)^(r-2), coefficient by coefficient."""
    if r < 2:
        raise InvalidArgument(f"need r >= 2, got r = {r}")
    lhs = _counts(counter, r, order, True)
    one_minus_q = TruncatedSeries.from_coeffs([1, -1], order)
    rhs = ps_mul(_counts(counter, r, order, False), ps_pow(one_minus_q, -(r - 2)))
    pairs = list(zip(lhs.coeffs, rhs.coeffs))
    mismatch = None
    for n, (a, b) in enumerate(pairs):
        if a != b:
            mismatch = {"n": n, "lhs": str(a), "rhs": str(b)}
            break
    verdict = HOLDS if mismatch is None else MISMATCH
    return ConjectureReport("pwp", {"r": r}, order, verdict,
                            first_mismatch=mismatch, pairs=pairs)


def closed_form_r_le_3(fd: FibrationData, order: int) -> TruncatedSeries:
    """Hilbert series * chi(S) / (1-q)^((r-2)(2-2g)), valid for r in {2, 3}."""
    if fd.r not in (2, 3):
        raise InvalidArgument("closed form only proven for r = 2, 3")
    hilb = hilbert_euler_series(fd.r, fd.chi_X, order)
    one_minus_q = TruncatedSeries.from_coeffs([1, -1], order)
    return ps_mul(hilb, ps_pow(one_minus_q, -(fd.r - 2) * (2 - 2 * fd.g))) * fd.chi_S
