"""Ramp secret-sharing schemes as explicit distribution-rule tables.

A scheme with thresholds 0 <= s < t <= n over a v-symbol share alphabet is a
set of distinct rules, each assigning one share in [0, v-1] to every player
and tagged with its secret, a (t-s)-tuple over [0, v-1].  Any t shares must
determine the secret; any s shares must reveal nothing about it.  Dealing
picks a rule for the requested secret with probability proportional to the
rule weights; uniform weights give every secret v^s rules and realize the
perfect-security distribution with a uniform prior on secrets.

Players are numbered 1..n in share bundles; rule share vectors are 0-indexed
internally.
"""

from __future__ import annotations

import itertools
import math
import random
from collections import defaultdict
from dataclasses import dataclass
from typing import Iterable, Mapping, Sequence

from .designs import (
    DEFAULT_CELL_CAP,
    AugmentedOA,
    SplitResult,
    aoa_split,
    verify_aoa,
)
from .errors import CapExceeded, SchemeError
from .gf import GF

DEFAULT_AUDIT_WORK_CAP = 10**7


@dataclass(frozen=True)
class Rule:
    """One distribution rule: a full share vector tagged with its secret."""

    shares: tuple[int, ...]
    secret: tuple[int, ...]


class ShareBundle:
    """Shares held by a subset of players, keyed by 1-based player index."""

    __slots__ = ("_pairs",)

    def __init__(self, assignments: Mapping[int, int] | Iterable[tuple[int, int]]):
        items = assignments.items() if isinstance(assignments, Mapping) else assignments
        pairs = []
        seen = set()
        for player, share in items:
            if player < 1:
                raise ValueError(f"player index {player} must be >= 1")
            if player in seen:
                raise ValueError(f"duplicate player index {player}")
            seen.add(player)
            pairs.append((int(player), int(share)))
        pairs.sort()
        self._pairs = tuple(pairs)

    @property
    def assignments(self) -> dict[int, int]:
        return dict(self._pairs)

    def items(self) -> tuple[tuple[int, int], ...]:
        return self._pairs

    def players(self) -> tuple[int, ...]:
        return tuple(p for p, _ in self._pairs)

    def restrict(self, players: Iterable[int]) -> "ShareBundle":
        keep = set(players)
        return ShareBundle([(p, x) for p, x in self._pairs if p in keep])

    def __len__(self) -> int:
        return len(self._pairs)

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, ShareBundle):
            return NotImplemented
        return self._pairs == other._pairs

    def __hash__(self) -> int:
        return hash(self._pairs)

    def __repr__(self) -> str:
        return f"ShareBundle({format_bundle(self)!r})"


def format_bundle(b: ShareBundle) -> str:
    """Space-separated ``player:share`` pairs, ascending player order."""
    return " ".join(f"{p}:{x}" for p, x in b.items())


def parse_bundle(text: str) -> ShareBundle:
    pairs = []
    for token in text.split():
        left, sep, right = token.partition(":")
        if not sep:
            raise ValueError(f"malformed share token {token!r}, expected player:share")
        pairs.append((int(left), int(right)))
    return ShareBundle(pairs)


class RampScheme:
    """An immutable distribution-rule table with per-rule selection weights.

    Rules are kept in canonical order (ascending share vector, then secret),
    matching the canonical row order of the equivalent augmented array.
    """

    def __init__(self, s: int, t: int, n: int, v: int,
                 rules: Iterable[Rule | tuple[Sequence[int], Sequence[int]]],
                 weights: Sequence[float] | None = None):
        if not 0 <= s < t <= n:
            raise SchemeError(f"need 0 <= s < t <= n, got s={s}, t={t}, n={n}")
        if v < 2:
            raise SchemeError(f"share alphabet must have >= 2 symbols, got {v}")
        normalized = []
        for r in rules:
            if not isinstance(r, Rule):
                r = Rule(tuple(r[0]), tuple(r[1]))
            if len(r.shares) != n:
                raise SchemeError(f"rule {r} does not assign shares to all {n} players")
            if any(not 0 <= x < v for x in r.shares):
                raise SchemeError(f"rule {r} has a share outside [0, {v - 1}]")
            if len(r.secret) != t - s or any(not 0 <= x < v for x in r.secret):
                raise SchemeError(
                    f"secret {r.secret} is not a ({t - s})-tuple over [0, {v - 1}]")
            normalized.append(r)
        if not normalized:
            raise SchemeError("a scheme needs at least one rule")
        if weights is None:
            weights = [1] * len(normalized)
        else:
            weights = list(weights)
            if len(weights) != len(normalized):
                raise SchemeError("one weight per rule required")
            if any(w <= 0 for w in weights):
                raise SchemeError("every rule weight must be positive")
        order = sorted(range(len(normalized)),
                       key=lambda i: normalized[i].shares + normalized[i].secret)
        self.s = s
        self.t = t
        self.n = n
        self.v = v
        self.rules: tuple[Rule, ...] = tuple(normalized[i] for i in order)
        self.weights: tuple[float, ...] = tuple(weights[i] for i in order)
        share_vectors = {r.shares for r in self.rules}
        if len(share_vectors) != len(self.rules):
            raise SchemeError("distribution rules must be distinct share vectors")
        by_secret: dict[tuple[int, ...], list[int]] = defaultdict(list)
        for i, r in enumerate(self.rules):
            by_secret[r.secret].append(i)
        self._by_secret = {k: tuple(ix) for k, ix in by_secret.items()}
        self.secrets: tuple[tuple[int, ...], ...] = tuple(sorted(self._by_secret))

    @property
    def is_ideal(self) -> bool:
        return len(self.secrets) == self.v ** (self.t - self.s)

    @property
    def has_uniform_weights(self) -> bool:
        return len(set(self.weights)) == 1

    def rules_for(self, secret: tuple[int, ...]) -> tuple[Rule, ...]:
        if secret not in self._by_secret:
            raise ValueError(f"unknown secret {secret}")
        return tuple(self.rules[i] for i in self._by_secret[secret])

    def __eq__(self, other: object) -> bool:
        if not isinstance(other, RampScheme):
            return NotImplemented
        return (self.s, self.t, self.n, self.v, self.rules, self.weights) == (
            other.s, other.t, other.n, other.v, other.rules, other.weights)

    def __repr__(self) -> str:
        return (f"RampScheme(s={self.s}, t={self.t}, n={self.n}, v={self.v}, "
                f"{len(self.rules)} rules, {len(self.secrets)} secrets)")


# ---------------------------------------------------------------------------
# constructions and transforms


def scheme_from_aoa(a: AugmentedOA, max_cells: int = DEFAULT_CELL_CAP) -> RampScheme:
    """One uniform-weight rule per row: shares from the plain columns, secret
    from the augmented tuple.

    The input must verify; each secret then owns exactly v^s rules, so the
    induced secret distribution is uniform and every rule has probability
    Pr[secret]/v^s, which is exactly the assignment that makes the scheme
    perfect rather than merely weak.
    """
    res = verify_aoa(a, max_cells)
    if not res.ok:
        raise SchemeError(f"array fails verification: {res.witness.describe()}")
    rules = [Rule(a.plain(r), a.augmented(r)) for r in a.rows]
    return RampScheme(a.s, a.t, a.k, a.v, rules)


def aoa_from_scheme(sch: RampScheme, max_cells: int = DEFAULT_CELL_CAP) -> AugmentedOA:
    """Write the rules out as rows (shares, then secret tuple) and verify.

    Requires an ideal scheme with the full complement of v^t rules; the
    verified result is the combinatorial equivalent of the scheme.
    """
    expected = sch.v**sch.t
    if len(sch.rules) != expected:
        raise SchemeError(f"expected {expected} rules, scheme has {len(sch.rules)}")
    if not sch.is_ideal:
        raise SchemeError(
            f"scheme is not ideal: {len(sch.secrets)} secrets, "
            f"need {sch.v ** (sch.t - sch.s)}")
    rows = [r.shares + r.secret for r in sch.rules]
    aoa = AugmentedOA(sch.s, sch.t, sch.n, sch.v, rows)
    res = verify_aoa(aoa, max_cells)
    if not res.ok:
        raise SchemeError(
            f"rule table is not a valid ramp scheme: {res.witness.describe()}")
    return aoa


def scheme_shamir(field: GF, s: int, t: int, n: int) -> RampScheme:
    """Polynomial-evaluation ramp scheme over GF(q), q >= n+1.

    One rule per coefficient vector a in GF(q)^t: player j's share is the
    polynomial sum(a_i * x_j^i) evaluated at the j-th nonzero field element
    (ascending encoding order), and the secret is (a_0, ..., a_{t-s-1}).
    With s = t-1 this is the classical threshold scheme: the secret is the
    constant term.
    """
    q = field.q
    if not 1 <= s < t <= n:
        raise SchemeError(f"need 1 <= s < t <= n, got s={s}, t={t}, n={n}")
    if q < n + 1:
        raise SchemeError(f"need q >= n+1 distinct evaluation points, got q={q}, n={n}")
    add, mul = field.add, field.mul
    points = list(range(1, n + 1))
    rules = []
    for coeffs in itertools.product(range(q), repeat=t):
        shares = []
        for x in points:
            acc = 0
            for c in reversed(coeffs):  # Horner
                acc = add(mul(acc, x), c)
            shares.append(acc)
        rules.append(Rule(tuple(shares), coeffs[: t - s]))
    return RampScheme(s, t, n, q, rules)


# ---------------------------------------------------------------------------
# dealing and reconstruction


def deal(sch: RampScheme, secret: Sequence[int], seed: int) -> ShareBundle:
    """Pick a rule for the secret, weight-proportionally, and hand out all n shares.

    Selection uses ``random.Random(seed)`` (Mersenne Twister), so the same
    seed always picks the same rule; reproducibility is the point here, not
    entropy quality.
    """
    key = tuple(secret)
    if key not in sch._by_secret:
        raise ValueError(f"unknown secret {key}")
    indices = sch._by_secret[key]
    rng = random.Random(seed)
    if len(indices) == 1:
        chosen = indices[0]
    else:
        weights = [sch.weights[i] for i in indices]
        chosen = rng.choices(indices, weights=weights, k=1)[0]
    rule = sch.rules[chosen]
    return ShareBundle({j + 1: x for j, x in enumerate(rule.shares)})


@dataclass(frozen=True)
class ReconstructionResult:
    status: str  # "ok" | "no_matching_rule" | "ambiguous"
    secret: tuple[int, ...] | None = None
    candidates: tuple[tuple[int, ...], ...] = ()

    def __bool__(self) -> bool:
        return self.status == "ok"


def reconstruct(sch: RampScheme, shares: ShareBundle) -> ReconstructionResult:
    """Filter the rules consistent with the bundle and read off the secret.

    At least t shares are required.  No consistent rule means the bundle is
    inconsistent with the scheme; more than one consistent secret cannot
    happen for a valid scheme and is therefore reported as an integrity
    failure rather than a user error.
    """
    if len(shares) < sch.t:
        raise ValueError(f"need at least t={sch.t} shares, got {len(shares)}")
    pairs = shares.items()
    for p, _ in pairs:
        if p > sch.n:
            raise ValueError(f"player index {p} exceeds n={sch.n}")
    found: set[tuple[int, ...]] = set()
    for rule in sch.rules:
        if all(rule.shares[p - 1] == x for p, x in pairs):
            found.add(rule.secret)
    if not found:
        return ReconstructionResult("no_matching_rule")
    if len(found) > 1:
        return ReconstructionResult("ambiguous", candidates=tuple(sorted(found)))
    return ReconstructionResult("ok", secret=next(iter(found)))


# ---------------------------------------------------------------------------
# security audit


@dataclass(frozen=True)
class AuditFailure:
    check: str  # "weak" | "perfect" | "bijection"
    players: tuple[int, ...]  # 1-based
    projection: tuple[int, ...]
    detail: str
    counts: tuple[tuple[tuple[int, ...], float], ...] = ()

    def describe(self) -> str:
        who = "{" + ",".join(map(str, self.players)) + "}"
        return f"[{self.check}] players {who} shares {self.projection}: {self.detail}"


@dataclass(frozen=True)
class AuditReport:
    ok: bool
    weak_ok: bool
    perfect_ok: bool | None  # None when weights are non-uniform or scheme non-ideal
    bijection_ok: bool | None  # None when scheme non-ideal
    subsets_checked: int
    groups_checked: int
    failures: tuple[AuditFailure, ...]

    def __bool__(self) -> bool:
        return self.ok


def audit_security(sch: RampScheme,
                   max_work: int = DEFAULT_AUDIT_WORK_CAP) -> AuditReport:
    """Exhaustive information-theoretic audit of the scheme's rule table.

    For every player subset of size <= s and every achievable share
    projection, counts consistent rule weight per secret.  Weak security
    needs every secret represented; perfect security (checked for ideal
    uniform-weight schemes, i.e. under the uniform secret prior) needs the
    weights exactly equal.  For ideal schemes it additionally checks, for
    each size-s subset, each projection, and each disjoint (t-s)-subset,
    that secrets map one-to-one onto the projections of the consistent rules
    there -- the structural fact that makes reconstruction well defined.
    """
    n, s, t = sch.n, sch.s, sch.t
    n_rules = len(sch.rules)
    base_subsets = sum(math.comb(n, i) for i in range(s + 1))
    bijection_subsets = math.comb(n, s) * math.comb(n - s, t - s) if sch.is_ideal else 0
    work = n_rules * (base_subsets + bijection_subsets)
    if work > max_work:
        raise CapExceeded(f"audit needs ~{work} rule visits, cap is {max_work}")

    check_perfect = sch.is_ideal and sch.has_uniform_weights
    failures: list[AuditFailure] = []
    weak_ok = True
    perfect_ok: bool | None = True if check_perfect else None
    groups = 0

    for size in range(s + 1):
        for subset in itertools.combinations(range(n), size):
            players = tuple(p + 1 for p in subset)
            by_proj: dict[tuple[int, ...], dict[tuple[int, ...], float]] = defaultdict(dict)
            for rule, w in zip(sch.rules, sch.weights):
                proj = tuple(rule.shares[p] for p in subset)
                per_secret = by_proj[proj]
                per_secret[rule.secret] = per_secret.get(rule.secret, 0) + w
            for proj in sorted(by_proj):
                groups += 1
                per_secret = by_proj[proj]
                counts = tuple((k, per_secret.get(k, 0)) for k in sch.secrets)
                missing = [k for k, w in counts if w == 0]
                if missing:
                    weak_ok = False
                    failures.append(AuditFailure(
                        "weak", players, proj,
                        f"secret {missing[0]} has no consistent rule", counts))
                elif check_perfect and len({w for _, w in counts}) != 1:
                    perfect_ok = False
                    failures.append(AuditFailure(
                        "perfect", players, proj,
                        "consistent-rule weights differ between secrets", counts))

    bijection_ok: bool | None = None
    if sch.is_ideal:
        bijection_ok = True
        others = set(range(n))
        for subset in itertools.combinations(range(n), s):
            players = tuple(p + 1 for p in subset)
            rest = sorted(others - set(subset))
            for p1 in itertools.combinations(rest, t - s):
                view: dict[tuple[int, ...], dict[tuple[int, ...], set]] = defaultdict(
                    lambda: defaultdict(set))
                for rule in sch.rules:
                    proj0 = tuple(rule.shares[p] for p in subset)
                    proj1 = tuple(rule.shares[p] for p in p1)
                    view[proj0][rule.secret].add(proj1)
                for proj0 in sorted(view):
                    groups += 1
                    images = view[proj0]
                    bad = next((k for k in sorted(images) if len(images[k]) != 1), None)
                    if bad is not None:
                        bijection_ok = False
                        failures.append(AuditFailure(
                            "bijection", players, proj0,
                            f"secret {bad} projects onto {tuple(p + 1 for p in p1)} "
                            f"in {len(images[bad])} different ways"))
                        continue
                    flat = sorted(next(iter(v)) for v in images.values())
                    if len(set(flat)) != len(flat) or len(flat) != len(sch.secrets):
                        bijection_ok = False
                        failures.append(AuditFailure(
                            "bijection", players, proj0,
                            f"secret-to-projection map onto {tuple(p + 1 for p in p1)} "
                            f"is not one-to-one"))

    ok = weak_ok and (perfect_ok is not False) and (bijection_ok is not False)
    return AuditReport(ok, weak_ok, perfect_ok, bijection_ok,
                       subsets_checked=base_subsets + bijection_subsets,
                       groups_checked=groups, failures=tuple(failures))


# ---------------------------------------------------------------------------
# bounds and strongness


@dataclass(frozen=True)
class IdealBoundVerdict:
    ok: bool
    ideal: bool
    bound: int
    secret_count: int

    def __bool__(self) -> bool:
        return self.ok


def ideal_bound_check(s: int, t: int, n: int, v: int, secret_count: int) -> IdealBoundVerdict:
    """Check a secret count against the v^(t-s) ceiling; equality means ideal."""
    if not 0 <= s < t <= n:
        raise ValueError(f"need 0 <= s < t <= n, got s={s}, t={t}, n={n}")
    if v < 2:
        raise ValueError(f"share alphabet must have >= 2 symbols, got {v}")
    bound = v ** (t - s)
    return IdealBoundVerdict(secret_count <= bound, secret_count == bound,
                             bound, secret_count)


def strongness(sch: RampScheme, max_cells: int = DEFAULT_CELL_CAP) -> SplitResult:
    """Test whether the scheme is strong, in the operational sense used here:
    its rule array, with the secret tuple expanded into plain columns, must
    be a full strength-t orthogonal array.  Only the canonical tuple encoding
    of secrets is considered."""
    return aoa_split(aoa_from_scheme(sch, max_cells), max_cells)
