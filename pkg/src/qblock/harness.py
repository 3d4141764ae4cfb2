"""Corruption injection and detection-rate measurement.

Each trial corrupts one field of a payload and decodes it.  Three outcomes:

    detected          decode raised TamperDetected
    miscorrected      decode succeeded but produced a different matrix
    undetected_equal  decode reproduced the original matrix exactly

All strategies touch fields that enter the decoded output, so
undetected_equal stays zero; it is counted anyway as a sanity check.
Trial t of a run uses seed (spec.seed + t), so individual trials are
independently reproducible.
"""

import random
from dataclasses import dataclass, replace
from enum import Enum

from .alphabet import get_alphabet
from .codec import CodedMessage, FRow, Scheme, decode, encode_text
from .errors import NotEnoughRows, TamperDetected
from .layout import NRule

OUTCOME_DETECTED = "detected"
OUTCOME_MISCORRECTED = "miscorrected"
OUTCOME_UNDETECTED_EQUAL = "undetected_equal"


class Strategy(Enum):
    PERTURB_D = "perturb-d"
    PERTURB_KEPT = "perturb-kept"
    SWAP_ROWS = "swap-rows"


@dataclass(frozen=True)
class CorruptionSpec:
    strategy: Strategy
    magnitude: int = 1
    seed: int = 0

    def __post_init__(self):
        if self.magnitude < 1:
            raise ValueError(f"magnitude must be >= 1, got {self.magnitude}")


@dataclass(frozen=True)
class DetectionReport:
    detected: int
    miscorrected: int
    trials: int
    outcomes: tuple[str, ...] = ()

    @property
    def undetected_equal(self) -> int:
        return self.trials - self.detected - self.miscorrected

    def summary(self) -> str:
        return (
            f"trials={self.trials} detected={self.detected} "
            f"miscorrected={self.miscorrected} undetected_equal={self.undetected_equal}"
        )


def _replace_row(rows: tuple[FRow, ...], index: int, row: FRow) -> tuple[FRow, ...]:
    return rows[:index] + (row,) + rows[index + 1 :]


def corrupt(coded: CodedMessage, spec: CorruptionSpec) -> CodedMessage:
    """Deterministically damage one field of the payload.

    The result always differs from the input in at least one field.
    """
    rng = random.Random(spec.seed)
    rows = coded.rows
    if spec.strategy is Strategy.PERTURB_D:
        i = rng.randrange(len(rows))
        delta = rng.randint(1, spec.magnitude) * rng.choice((1, -1))
        new_row = replace(rows[i], d=rows[i].d + delta)
        return replace(coded, rows=_replace_row(rows, i, new_row))

    if spec.strategy is Strategy.PERTURB_KEPT:
        size = get_alphabet(coded.alphabet_id).size
        while True:
            i = rng.randrange(len(rows))
            field = rng.choice(("k1", "k2", "k3"))
            delta = rng.randint(1, spec.magnitude) * rng.choice((1, -1))
            old = getattr(rows[i], field)
            new = (old + delta) % size
            if new != old:  # magnitude >= size can draw a full wrap
                new_row = replace(rows[i], **{field: new})
                return replace(coded, rows=_replace_row(rows, i, new_row))

    # SWAP_ROWS: exchange two rows that differ in value
    if len(rows) < 2:
        raise NotEnoughRows("need at least 2 rows to swap")
    pairs = [
        (i, j) for i in range(len(rows)) for j in range(i + 1, len(rows)) if rows[i] != rows[j]
    ]
    if not pairs:
        raise NotEnoughRows("all rows are identical, swapping changes nothing")
    i, j = pairs[rng.randrange(len(pairs))]
    swapped = list(rows)
    swapped[i], swapped[j] = swapped[j], swapped[i]
    return replace(coded, rows=tuple(swapped))


def trial_spec(spec: CorruptionSpec, trial: int) -> CorruptionSpec:
    """The spec actually used for trial number `trial` (0-based)."""
    return replace(spec, seed=spec.seed + trial)


def detection_rate(
    message: str,
    scheme: Scheme,
    spec: CorruptionSpec,
    trials: int,
    n_rule: NRule = NRule.HALF,
    alphabet_id: str = "default",
) -> DetectionReport:
    """Corrupt-then-decode `trials` times and tally the outcomes."""
    if trials < 1:
        raise ValueError(f"trials must be >= 1, got {trials}")
    coded = encode_text(message, scheme, n_rule, alphabet_id)
    original = decode(coded)

    detected = miscorrected = 0
    outcomes = []
    for trial in range(trials):
        damaged = corrupt(coded, trial_spec(spec, trial))
        try:
            result = decode(damaged)
        except TamperDetected:
            detected += 1
            outcomes.append(OUTCOME_DETECTED)
            continue
        if result != original:
            miscorrected += 1
            outcomes.append(OUTCOME_MISCORRECTED)
        else:
            outcomes.append(OUTCOME_UNDETECTED_EQUAL)
    return DetectionReport(detected, miscorrected, trials, tuple(outcomes))
