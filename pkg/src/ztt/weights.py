"""Weight sequences a_1, a_2, ... of positive rationals.

Four built-in families (ones, linear, reciprocal powers, q-scaled) plus
finite custom lists, together with the power sums sum_{m<=n} a_m^j that the
recurrence-based algorithms consume.  Configurations round-trip through a
small JSON schema.
"""

from __future__ import annotations

import json
from dataclasses import dataclass
from fractions import Fraction

from .exact import format_rational, harmonic, parse_rational

__all__ = [
    "WeightConfigError",
    "WeightSequence",
    "OnesWeights",
    "LinearWeights",
    "ZetaWeights",
    "QModifiedWeights",
    "CustomWeights",
    "weight_at",
    "power_sum",
    "has_distinct_terms",
    "parse_weight_config",
    "load_weight_config",
    "builtin_weights",
]


class WeightConfigError(ValueError):
    """Malformed or invalid weight configuration."""


class WeightSequence:
    """Base class; concrete families implement term(m) for m >= 1."""

    kind: str = "abstract"

    def term(self, m: int) -> Fraction:
        raise NotImplementedError

    def power_sum(self, n: int, j: int) -> Fraction:
        total = Fraction(0)
        for m in range(1, n + 1):
            total += self.term(m) ** j
        return total

    def upper_index(self) -> int | None:
        """Largest valid index, or None when the sequence is unbounded."""
        return None

    def config(self) -> dict:
        raise NotImplementedError

    def label(self) -> str:
        return self.kind


@dataclass(frozen=True)
class OnesWeights(WeightSequence):
    kind = "ones"

    def term(self, m: int) -> Fraction:
        return Fraction(1)

    def power_sum(self, n: int, j: int) -> Fraction:
        return Fraction(n)

    def config(self) -> dict:
        return {"kind": "ones"}


@dataclass(frozen=True)
class LinearWeights(WeightSequence):
    kind = "linear"

    def term(self, m: int) -> Fraction:
        return Fraction(m)

    def config(self) -> dict:
        return {"kind": "linear"}


@dataclass(frozen=True)
class ZetaWeights(WeightSequence):
    """a_m = 1/m**order; power sums are generalized harmonic numbers."""

    order: int
    kind = "zeta"

    def __post_init__(self):
        if not isinstance(self.order, int) or self.order < 1:
            raise WeightConfigError("zeta weights need an integer order >= 1")

    def term(self, m: int) -> Fraction:
        return Fraction(1, m**self.order)

    def power_sum(self, n: int, j: int) -> Fraction:
        return harmonic(n, self.order * j)

    def config(self) -> dict:
        return {"kind": "zeta", "m": self.order}

    def label(self) -> str:
        return f"zeta:{self.order}"


@dataclass(frozen=True)
class QModifiedWeights(WeightSequence):
    """a_m replaced by a_m * q**m over a base sequence."""

    base: WeightSequence
    q: Fraction
    kind = "q_modified"

    def __post_init__(self):
        object.__setattr__(self, "q", Fraction(self.q))
        if self.q <= 0:
            raise WeightConfigError("q_modified weights need q > 0")

    def term(self, m: int) -> Fraction:
        return self.base.term(m) * self.q**m

    def upper_index(self) -> int | None:
        return self.base.upper_index()

    def config(self) -> dict:
        return {"kind": "q_modified", "q": format_rational(self.q), "base": self.base.config()}

    def label(self) -> str:
        return f"q_modified(q={self.q}, base={self.base.label()})"


@dataclass(frozen=True)
class CustomWeights(WeightSequence):
    """Finite explicit list; indexing past the end is an error."""

    values: tuple[Fraction, ...]
    kind = "custom"

    def __post_init__(self):
        vals = tuple(Fraction(v) for v in self.values)
        if not vals:
            raise WeightConfigError("custom weights need at least one value")
        if any(v <= 0 for v in vals):
            raise WeightConfigError("weights must be positive rationals")
        object.__setattr__(self, "values", vals)

    def term(self, m: int) -> Fraction:
        if m > len(self.values):
            raise WeightConfigError(
                f"custom weight index {m} out of range (sequence has {len(self.values)} values)"
            )
        return self.values[m - 1]

    def upper_index(self) -> int | None:
        return len(self.values)

    def config(self) -> dict:
        return {"kind": "custom", "values": [format_rational(v) for v in self.values]}

    def label(self) -> str:
        return f"custom[{len(self.values)}]"


def weight_at(seq: WeightSequence, m: int) -> Fraction:
    """a_m, validating the index."""
    if not isinstance(m, int) or m < 1:
        raise ValueError(f"weight index must be an integer >= 1, got {m!r}")
    return seq.term(m)


def power_sum(seq: WeightSequence, n: int, j: int) -> Fraction:
    """sum_{m=1}^{n} a_m**j, using a closed form when the family has one."""
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"power_sum needs n >= 0, got {n!r}")
    if not isinstance(j, int) or j < 1:
        raise ValueError(f"power_sum needs j >= 1, got {j!r}")
    upper = seq.upper_index()
    if upper is not None and n > upper:
        raise WeightConfigError(
            f"power sum up to n={n} exceeds the {upper} available custom weights"
        )
    return seq.power_sum(n, j)


def has_distinct_terms(seq: WeightSequence, n: int) -> bool:
    """True when a_1, ..., a_n are pairwise distinct."""
    terms = [weight_at(seq, m) for m in range(1, n + 1)]
    return len(set(terms)) == n


_ALLOWED_KEYS = {
    "ones": {"kind"},
    "linear": {"kind"},
    "zeta": {"kind", "m"},
    "custom": {"kind", "values"},
    "q_modified": {"kind", "q", "base"},
}


def _build(cfg, depth: int = 0) -> WeightSequence:
    if depth > 8:
        raise WeightConfigError("weight config nesting too deep")
    if not isinstance(cfg, dict):
        raise WeightConfigError(f"weight config must be an object, got {type(cfg).__name__}")
    kind = cfg.get("kind")
    if kind not in _ALLOWED_KEYS:
        raise WeightConfigError(
            f"unknown weight kind {kind!r}; expected one of {sorted(_ALLOWED_KEYS)}"
        )
    extra = set(cfg) - _ALLOWED_KEYS[kind]
    if extra:
        raise WeightConfigError(f"unexpected keys for kind {kind!r}: {sorted(extra)}")
    if kind == "ones":
        return OnesWeights()
    if kind == "linear":
        return LinearWeights()
    if kind == "zeta":
        if "m" not in cfg:
            raise WeightConfigError("zeta weights need the key 'm'")
        m = cfg["m"]
        if isinstance(m, bool) or not isinstance(m, int):
            raise WeightConfigError(f"zeta order must be an integer, got {m!r}")
        return ZetaWeights(m)
    if kind == "custom":
        if "values" not in cfg or not isinstance(cfg["values"], list):
            raise WeightConfigError("custom weights need a list under 'values'")
        vals = []
        for v in cfg["values"]:
            try:
                vals.append(parse_rational(v) if isinstance(v, str) else Fraction(v))
            except (ValueError, TypeError) as exc:
                raise WeightConfigError(f"bad custom weight value {v!r}") from exc
        return CustomWeights(tuple(vals))
    # q_modified
    if "q" not in cfg or "base" not in cfg:
        raise WeightConfigError("q_modified weights need the keys 'q' and 'base'")
    qv = cfg["q"]
    try:
        q = parse_rational(qv) if isinstance(qv, str) else Fraction(qv)
    except (ValueError, TypeError) as exc:
        raise WeightConfigError(f"bad q value {qv!r}") from exc
    return QModifiedWeights(_build(cfg["base"], depth + 1), q)


def parse_weight_config(source) -> WeightSequence:
    """Build a weight sequence from a JSON string or an already-parsed dict."""
    if isinstance(source, (str, bytes)):
        try:
            cfg = json.loads(source)
        except json.JSONDecodeError as exc:
            raise WeightConfigError(f"weight config is not valid JSON: {exc}") from exc
    else:
        cfg = source
    return _build(cfg)


def load_weight_config(path: str) -> WeightSequence:
    """Read a weight configuration JSON file."""
    try:
        with open(path, "r", encoding="utf-8") as fh:
            text = fh.read()
    except OSError as exc:
        raise WeightConfigError(f"cannot read weight config {path!r}: {exc}") from exc
    return parse_weight_config(text)


def builtin_weights(name: str) -> WeightSequence:
    """Resolve 'ones', 'linear', or 'zeta:<m>' to a weight sequence."""
    if name == "ones":
        return OnesWeights()
    if name == "linear":
        return LinearWeights()
    if name.startswith("zeta:"):
        try:
            order = int(name.split(":", 1)[1])
        except ValueError as exc:
            raise WeightConfigError(f"bad zeta order in {name!r}") from exc
        return ZetaWeights(order)
    raise WeightConfigError(
        f"unknown builtin weights {name!r}; expected ones, linear, or zeta:<m>"
    )
