"""Batch verification of the theorem and conjecture suites.

Each claim has an input space sharded by permutation; a shard produces a
list of reports.  Shard order is fixed, so report files are byte-stable
for a given configuration regardless of the parallelism degree (timing
is only recorded on request for the same reason).
"""
from __future__ import annotations

import random
import time
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass, field, asdict
from typing import Callable, Iterable, Iterator

from . import incexc, schubert, weylchar
from .diagrams import restrict_remove, rothe
from .errors import BudgetExceededError
from .permwords import (
    Permutation,
    Word,
    all_permutations,
    all_subwords,
    avoids,
    flatten,
)
from .polyx import Monomial
from .purple import characterize_monomials, purple_family, verify_theorem_gen

DEFAULT_SEED = 2718


@dataclass(frozen=True)
class RunConfig:
    max_n: int = 5
    jobs: int = 1
    seed: int = DEFAULT_SEED
    budget_dominated: int = weylchar.DEFAULT_BUDGET
    reduced_word_cap: int = 12
    sample_pairs_n6: int = 500
    sample_chi_n5: int = 50
    include_timing: bool = False


@dataclass(frozen=True)
class VerificationReport:
    claim: str
    subject: str
    verdict: str  # holds | fails | outside-scope | budget-exceeded
    witness: str | None = None
    elapsed_ms: float | None = None

    def as_dict(self) -> dict:
        d = {"claim": self.claim, "subject": self.subject, "verdict": self.verdict}
        if self.witness is not None:
            d["witness"] = self.witness
        if self.elapsed_ms is not None:
            d["elapsed_ms"] = self.elapsed_ms
        return d


Shard = tuple  # (claim-specific payload, always starts with a subject string)


@dataclass(frozen=True)
class Claim:
    name: str
    description: str
    shards: Callable[[RunConfig], list[Shard]]
    run: Callable[[Shard, RunConfig], list[VerificationReport]]


def _perm_shards(config: RunConfig, n_min: int = 2, n_max: int | None = None) -> list[Shard]:
    top = config.max_n if n_max is None else min(config.max_n, n_max)
    return [
        (str(w), w.values)
        for n in range(n_min, top + 1)
        for w in all_permutations(n)
    ]


# -- alternating-sum nonnegativity (avoiders) --------------------------------


def _shards_alt_nonneg(config: RunConfig) -> list[Shard]:
    shards: list[Shard] = []
    for n in range(2, min(config.max_n, 5) + 1):
        for w in all_permutations(n):
            shards.append((str(w), w.values, None))
    if config.max_n >= 6:
        rng = random.Random(config.seed)
        for n in range(6, config.max_n + 1):
            avoiders = [w for w in all_permutations(n) if avoids(w)]
            pairs: dict[tuple[int, ...], list[str]] = {}
            for _ in range(config.sample_pairs_n6):
                w = rng.choice(avoiders)
                subs = all_subwords(w)
                u = subs[rng.randrange(len(subs))]
                pairs.setdefault(w.values, []).append(str(u))
            for values in sorted(pairs):
                shards.append((str(Permutation(values)), values, tuple(pairs[values])))
    return shards


def _run_alt_nonneg(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values, u_strings = shard
    w = Permutation(values)
    if not avoids(w):
        return [VerificationReport("thm1.1", subject, "outside-scope")]
    words = (
        all_subwords(w)
        if u_strings is None
        else [Word.from_string(s) for s in u_strings]
    )
    failures = []
    for u in words:
        result = incexc.alternating_sum(w, u, keep_terms=False)
        ok, bad = result.total.is_nonnegative()
        if not ok:
            failures.append(f"u={u}: coeff {bad[1]} at {bad[0]}")
    if failures:
        return [VerificationReport("thm1.1", subject, "fails", "; ".join(failures))]
    return [VerificationReport("thm1.1", subject, "holds")]


# -- single-removal nonnegativity (all permutations) -------------------------


def _run_single_step(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values = shard
    sigma = Permutation(values)
    failures = []
    for k in range(1, sigma.n + 1):
        ok, diff = incexc.verify_single_step(sigma, k)
        if not ok:
            _, bad = diff.is_nonnegative()
            failures.append(f"k={k}: coeff {bad[1]} at {bad[0]}")
    if failures:
        return [VerificationReport("thm1.0", subject, "fails", "; ".join(failures))]
    return [VerificationReport("thm1.0", subject, "holds")]


# -- c_w agreement between the counting and the alternating route ------------


def _shards_avoiders(config: RunConfig) -> list[Shard]:
    return [s for s in _perm_shards(config) if avoids(Permutation(s[1]))]


def _run_cw_equality(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values = shard
    w = Permutation(values)
    by_ie = incexc.cw_inclusion_exclusion(w)
    by_aug = incexc.cw_augmentation(w)
    if by_ie != by_aug:
        return [
            VerificationReport(
                "thm1.2", subject, "fails", f"inclusion-exclusion {by_ie} != augmentation {by_aug}"
            )
        ]
    return [VerificationReport("thm1.2", subject, "holds")]


# -- dual character equals the Schubert polynomial ---------------------------


def _shards_chi(config: RunConfig) -> list[Shard]:
    shards = _perm_shards(config, n_max=4)
    if config.max_n >= 5:
        rng = random.Random(config.seed)
        perms = list(all_permutations(5))
        chosen = sorted({rng.randrange(len(perms)) for _ in range(config.sample_chi_n5 * 2)})
        chosen = chosen[: config.sample_chi_n5]
        shards.extend((str(perms[i]), perms[i].values) for i in chosen)
    return shards


def _run_chi_equality(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values = shard
    w = Permutation(values)
    try:
        character = weylchar.chi(rothe(w), budget=config.budget_dominated)
    except BudgetExceededError as exc:
        return [VerificationReport("thm2.4", subject, "budget-exceeded", str(exc))]
    expected = schubert.schubert_divdiff(w)
    if character != expected:
        delta = character - expected
        mon = min(delta.support(), key=Monomial.sort_key)
        return [
            VerificationReport(
                "thm2.4", subject, "fails", f"difference {delta.coefficient(mon)} at {mon}"
            )
        ]
    return [VerificationReport("thm2.4", subject, "holds")]


# -- diagram-sum formula holds exactly for avoiders --------------------------


def _run_diagram_formula(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values = shard
    w = Permutation(values)
    equal = schubert.diagram_sum(w) == schubert.schubert_divdiff(w)
    if equal != avoids(w):
        side = "equality" if equal else "inequality"
        return [
            VerificationReport(
                "thm2.7", subject, "fails", f"unexpected {side} for avoidance={avoids(w)}"
            )
        ]
    return [VerificationReport("thm2.7", subject, "holds")]


# -- purple-family subtraction ----------------------------------------------


def _run_purple_members(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values = shard
    w = Permutation(values)
    D = rothe(w)
    chi_D = schubert.schubert_divdiff(w)
    failures = []
    for k in range(1, w.n + 1):
        l = w(k)
        family = purple_family(D, k, l)
        try:
            chi_hat = weylchar.chi_fast(restrict_remove(D, k, l), budget=config.budget_dominated)
        except BudgetExceededError as exc:
            return [VerificationReport("thm4.1", subject, "budget-exceeded", str(exc))]
        for K in sorted(family.members, key=lambda d: d.box_list()):
            ok, diff = verify_theorem_gen(D, k, l, K, chi_D=chi_D, chi_hat=chi_hat)
            if not ok:
                _, bad = diff.is_nonnegative()
                failures.append(f"k={k} K={K}: coeff {bad[1]} at {bad[0]}")
    if failures:
        return [VerificationReport("thm4.1", subject, "fails", "; ".join(failures))]
    return [VerificationReport("thm4.1", subject, "holds")]


# -- nonnegativity of the specialized alternating sums, all permutations -----


def _run_cwu_nonneg(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values = shard
    w = Permutation(values)
    n = w.n
    # g[mask] = signed specialization of the subword at mask; the superset
    # sum then gives the alternating value for u = mask in one transform.
    g = [0] * (1 << n)
    for mask in range(1 << n):
        letters = tuple(w(i + 1) for i in range(n) if (mask >> i) & 1)
        sign = 1 if (n - len(letters)) % 2 == 0 else -1
        g[mask] = sign * schubert.principal_specialization(flatten(Word(letters)))
    for bit in range(n):
        b = 1 << bit
        for mask in range(1 << n):
            if not mask & b:
                g[mask] += g[mask | b]
    bad = [mask for mask in range(1 << n) if g[mask] < 0]
    if bad:
        mask = bad[0]
        u = Word(tuple(w(i + 1) for i in range(n) if (mask >> i) & 1))
        return [VerificationReport("conj5.1", subject, "fails", f"u={u}: value {g[mask]}")]
    return [VerificationReport("conj5.1", subject, "holds")]


# -- purple monomials characterize the working monomials (avoiders) ----------


def _run_purple_characterization(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values = shard
    sigma = Permutation(values)
    if not avoids(sigma):
        return [VerificationReport("conj5.3", subject, "outside-scope")]
    failures = []
    for k in range(1, sigma.n + 1):
        result = characterize_monomials(sigma, k)
        missing = result.from_purple - result.working
        if missing:
            failures.append(f"k={k}: purple monomial not working: {sorted(map(str, missing))}")
        if result.extra:
            failures.append(f"k={k}: extra working monomials {sorted(map(str, result.extra))}")
    if failures:
        return [VerificationReport("conj5.3", subject, "fails", "; ".join(failures))]
    return [VerificationReport("conj5.3", subject, "holds")]


# -- specialization identity and vanishing ----------------------------------

_cw_ie_cache: dict[tuple[int, ...], int] = {}


def _cw_ie(w: Permutation) -> int:
    key = w.values
    if key not in _cw_ie_cache:
        _cw_ie_cache[key] = incexc.cw_inclusion_exclusion(w)
    return _cw_ie_cache[key]


def _run_identity(shard: Shard, config: RunConfig) -> list[VerificationReport]:
    subject, values = shard
    w = Permutation(values)
    total = sum(_cw_ie(flatten(v)) for v in all_subwords(w))
    spec = schubert.principal_specialization(w)
    failures = []
    if total != spec:
        failures.append(f"sum of c over subwords = {total}, specialization = {spec}")
    if w(w.n) == w.n and _cw_ie(w) != 0:
        failures.append(f"c = {_cw_ie(w)} despite fixed last point")
    if failures:
        return [VerificationReport("identity", subject, "fails", "; ".join(failures))]
    return [VerificationReport("identity", subject, "holds")]


CLAIMS: dict[str, Claim] = {
    "thm1.1": Claim(
        "thm1.1",
        "alternating pattern expansion is nonnegative for 1432/1423-avoiders",
        _shards_alt_nonneg,
        _run_alt_nonneg,
    ),
    "thm1.0": Claim(
        "thm1.0",
        "single-removal monomial subtraction is nonnegative for all permutations",
        _perm_shards,
        _run_single_step,
    ),
    "thm1.2": Claim(
        "thm1.2",
        "non-augmentation count equals the alternating specialization (avoiders)",
        _shards_avoiders,
        _run_cw_equality,
    ),
    "thm2.4": Claim(
        "thm2.4",
        "dual character of the Rothe diagram equals the Schubert polynomial",
        _shards_chi,
        _run_chi_equality,
    ),
    "thm2.7": Claim(
        "thm2.7",
        "diagram-sum formula holds exactly when 1432 and 1423 are avoided",
        _perm_shards,
        _run_diagram_formula,
    ),
    "thm4.1": Claim(
        "thm4.1",
        "every purple-family monomial is a valid subtraction factor",
        _perm_shards,
        _run_purple_members,
    ),
    "conj5.1": Claim(
        "conj5.1",
        "all alternating specializations are nonnegative (all permutations)",
        _perm_shards,
        _run_cwu_nonneg,
    ),
    "conj5.3": Claim(
        "conj5.3",
        "purple monomials are exactly the working monomials for avoiders",
        _perm_shards,
        _run_purple_characterization,
    ),
    "identity": Claim(
        "identity",
        "subword c-sum equals the principal specialization; c vanishes on fixed last point",
        _perm_shards,
        _run_identity,
    ),
}


def _shard_worker(args: tuple[str, Shard, dict]) -> list[dict]:
    claim_name, shard, config_dict = args
    config = RunConfig(**config_dict)
    reports = CLAIMS[claim_name].run(shard, config)
    return [r.as_dict() for r in reports]


def run_claim(claim_name: str, config: RunConfig) -> Iterator[VerificationReport]:
    """Run one claim over its configured input space, in shard order."""
    claim = CLAIMS[claim_name]
    shards = claim.shards(config)
    if config.jobs <= 1:
        for shard in shards:
            start = time.monotonic()
            for report in claim.run(shard, config):
                if config.include_timing:
                    report = VerificationReport(
                        report.claim,
                        report.subject,
                        report.verdict,
                        report.witness,
                        round((time.monotonic() - start) * 1000, 3),
                    )
                yield report
    else:
        config_dict = asdict(config)
        args = [(claim_name, shard, config_dict) for shard in shards]
        with ProcessPoolExecutor(max_workers=config.jobs) as pool:
            for dicts in pool.map(_shard_worker, args, chunksize=8):
                for d in dicts:
                    yield VerificationReport(
                        d["claim"], d["subject"], d["verdict"], d.get("witness")
                    )


def exit_code(reports: Iterable[VerificationReport]) -> int:
    """0 all holds, 2 counterexample, 3 budget exceeded somewhere."""
    code = 0
    for r in reports:
        if r.verdict == "fails":
            return 2
        if r.verdict == "budget-exceeded":
            code = 3
    return code
