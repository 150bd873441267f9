"""Cross-verification suites run against the brute-force oracle."""

from __future__ import annotations

from dataclasses import dataclass, field

from .counting import (
    DEFAULT_MAX_FREE_STEPS,
    brute_pattern_count,
    closed_form_bk,
    count,
    oracle_histogram,
    psi,
    realizable_census,
    realizable_columns,
)
from .excedance import ExcedanceWord, all_words, excedance_matrix, inflate, reverse_complement
from .group import DEFAULT_MAX_ENUMERATION, Signature, check_enumeration_guard, enumerate_group
from .sequences import bk_table, is_palindromic, is_unimodal, log_concavity_violation

SUITES = ("observations", "closed-form", "ie", "partition", "symmetry", "sequence")

# beyond this word length the ie suite checks the histogram support only
EXHAUSTIVE_WORD_LENGTH = 16

# brute force over S_n in the ie suite is skipped above this n
BRUTE_PATTERN_MAX_N = 8


@dataclass
class Check:
    name: str
    status: str  # "pass", "fail" or "skip"
    detail: str = ""

    @property
    def ok(self) -> bool:
        return self.status != "fail"


@dataclass
class VerificationReport:
    sig: Signature
    checks: list[Check] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return all(c.ok for c in self.checks)

    def as_dict(self) -> dict:
        return {
            "r": self.sig.r,
            "n": self.sig.n,
            "checks": [{"name": c.name, "status": c.status, "detail": c.detail} for c in self.checks],
            "overall": "pass" if self.passed else "fail",
        }

    def render(self) -> str:
        lines = [f"verify G({self.sig.r},{self.sig.n})"]
        for c in self.checks:
            line = f"{c.status.upper():4} {c.name}"
            if c.detail:
                line += f": {c.detail}"
            lines.append(line)
        lines.append(f"overall: {'pass' if self.passed else 'fail'}")
        return "\n".join(lines)


def _word(sig, letters):
    return ExcedanceWord(sig, letters)


def check_observations(sig, max_elements=DEFAULT_MAX_ENUMERATION) -> Check:
    r = sig.r
    checked = 0
    for pi in enumerate_group(sig, max_elements):
        m = excedance_matrix(pi)
        for i, c in enumerate(pi.colors, start=1):
            col = m.column(i)
            if c == 0:
                expected = ("a" if pi.digits[i - 1] <= i else "b") * r
            else:
                expected = "b" * c + "a" * (r - c)
            if col != expected:
                return Check("observations", "fail", f"{pi} column {i} reads {col}, expected {expected}")
        checked += 1
    return Check("observations", "pass", f"{checked} elements")


def check_closed_form(sig, hist) -> Check:
    if sig.r == 1:
        return Check("closed-form", "skip", "closed form needs r >= 2")
    L = sig.word_length
    for k in range(L + 1):
        expected = hist.get("b" * k + "a" * (L - k), 0)
        got = closed_form_bk(k, sig)
        if got != expected:
            return Check("closed-form", "fail", f"k={k}: closed form {got}, oracle {expected}")
    return Check("closed-form", "pass", f"k=0..{L}")


def _words_in_scope(sig, hist):
    if sig.word_length <= EXHAUSTIVE_WORD_LENGTH:
        return [w.letters for w in all_words(sig)]
    return sorted(hist)


def _scope(sig, hist):
    if sig.word_length <= EXHAUSTIVE_WORD_LENGTH:
        return f"all {2 ** sig.word_length} words"
    return f"{len(hist)} words in the oracle support"


def check_ie(sig, hist, max_free=DEFAULT_MAX_FREE_STEPS) -> Check:
    words = _words_in_scope(sig, hist)
    brute = sig.n <= BRUTE_PATTERN_MAX_N
    for letters in words:
        w = _word(sig, letters)
        expected = hist.get(letters, 0)
        got = count(w, method="auto", max_free=max_free).count
        if got != expected:
            return Check("ie", "fail", f"word {w}: inclusion-exclusion {got}, oracle {expected}")
        if brute and expected:
            via_sn = brute_pattern_count(psi(inflate(w)))
            if via_sn != expected:
                return Check("ie", "fail", f"word {w}: S_n brute force {via_sn}, oracle {expected}")
    return Check("ie", "pass", _scope(sig, hist))


def check_partition(sig, hist) -> Check:
    total = sum(hist.values())
    if total != sig.order:
        return Check("partition", "fail", f"histogram sums to {total}, group order {sig.order}")
    for letters in hist:
        if realizable_columns(inflate(_word(sig, letters))) is None:
            return Check("partition", "fail", f"word {_word(sig, letters)} occurs but is not realizable")
    census = realizable_census(sig)
    if len(hist) != census:
        return Check("partition", "fail", f"{len(hist)} words occur, expected r(r+1)^(n-1) = {census}")
    return Check("partition", "pass", f"sum {total}, {census} realizable words")


def check_symmetry(sig, hist) -> Check:
    # on w = b^k a^(L-k) this is the symmetry k <-> L-k of the bk table
    for letters in _words_in_scope(sig, hist):
        w = _word(sig, letters)
        mirror = reverse_complement(w)
        left, right = hist.get(letters, 0), hist.get(mirror.letters, 0)
        if left != right:
            return Check("symmetry", "fail", f"[{w}] = {left} but [{mirror}] = {right}")
    return Check("symmetry", "pass", f"[w] = [reversed complement of w], {_scope(sig, hist)}")


def check_sequence(sig, max_free=DEFAULT_MAX_FREE_STEPS) -> Check:
    values = bk_table(sig, max_free).values
    if any(v <= 0 for v in values):
        return Check("sequence", "fail", f"nonpositive entry in {values}")
    k = log_concavity_violation(values)
    if k is not None:
        return Check("sequence", "fail", f"not log-concave at k={k}")
    if not is_unimodal(values):
        return Check("sequence", "fail", "not unimodal")
    if not is_palindromic(values):
        return Check("sequence", "fail", "not palindromic")
    return Check("sequence", "pass", " ".join(map(str, values)))


def run_verification(
    sig: Signature,
    what: str = "all",
    max_elements: int = DEFAULT_MAX_ENUMERATION,
    max_free: int = DEFAULT_MAX_FREE_STEPS,
) -> VerificationReport:
    """Run the selected suites in a fixed order.

    Raises GuardError if an oracle-backed suite would exceed the enumeration
    cap.
    """
    selected = SUITES if what == "all" else (what,)
    if any(s not in SUITES for s in selected):
        raise ValueError(f"unknown suite {what!r}")
    report = VerificationReport(sig)
    hist = None
    if any(s != "sequence" for s in selected):
        check_enumeration_guard(sig, max_elements)
        hist = oracle_histogram(sig, max_elements)
    for suite in SUITES:
        if suite not in selected:
            continue
        if suite == "observations":
            report.checks.append(check_observations(sig, max_elements))
        elif suite == "closed-form":
            report.checks.append(check_closed_form(sig, hist))
        elif suite == "ie":
            report.checks.append(check_ie(sig, hist, max_free))
        elif suite == "partition":
            report.checks.append(check_partition(sig, hist))
        elif suite == "symmetry":
            report.checks.append(check_symmetry(sig, hist))
        elif suite == "sequence":
            report.checks.append(check_sequence(sig, max_free))
    return report
