"""Core value types: immutable datasets and the mutable labeled/unlabeled pool.

A :class:`Dataset` stores feature vectors with ground-truth labels and stable
integer example ids.  Rows are always kept in ascending id order, which makes
"break ties by lower id" equivalent to "break ties by lower row position"
everywhere downstream.  :class:`PoolState` tracks which examples have had
their labels revealed as a simulation proceeds.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .rng import RngStream

# Binary runs designate this class index as the positive class.
POSITIVE_CLASS = 2


@dataclass(frozen=True)
class Dataset:
    """Immutable store of examples: ids, features, and ground-truth labels.

    ``ids`` are unique nonnegative integers in strictly ascending order.
    Freshly generated datasets have dense ids 0..n-1; datasets produced by a
    split keep their original ids.  Labels are class indices in 1..K.
    """

    ids: np.ndarray
    features: np.ndarray
    labels: np.ndarray
    num_classes: int
    positive_class: int = POSITIVE_CLASS

    def __post_init__(self) -> None:
        ids = np.ascontiguousarray(self.ids, dtype=np.int64)
        features = np.ascontiguousarray(self.features, dtype=np.float64)
        labels = np.ascontiguousarray(self.labels, dtype=np.int64)
        if features.ndim != 2:
            raise ValueError(f"features must be 2-D, got shape {features.shape}")
        n = features.shape[0]
        if ids.shape != (n,) or labels.shape != (n,):
            raise ValueError(
                f"ids/features/labels row counts disagree: {ids.shape}, {features.shape}, {labels.shape}"
            )
        if n > 0:
            if not np.all(np.diff(ids) > 0) or ids[0] < 0:
                raise ValueError("ids must be nonnegative and strictly ascending")
            if not np.isfinite(features).all():
                raise ValueError("features must be finite")
            if labels.min() < 1 or labels.max() > self.num_classes:
                raise ValueError(f"labels must lie in 1..{self.num_classes}")
        if not 1 <= self.positive_class <= self.num_classes:
            raise ValueError(f"positive_class {self.positive_class} outside 1..{self.num_classes}")
        for arr in (ids, features, labels):
            arr.flags.writeable = False
        object.__setattr__(self, "ids", ids)
        object.__setattr__(self, "features", features)
        object.__setattr__(self, "labels", labels)

    def __len__(self) -> int:
        return self.features.shape[0]

    @property
    def dimension(self) -> int:
        return self.features.shape[1]

    @property
    def skew(self) -> float:
        """Fraction of examples in the positive class, exactly as stored."""
        if len(self) == 0:
            return 0.0
        return float(np.count_nonzero(self.labels == self.positive_class)) / len(self)

    @property
    def positive_count(self) -> int:
        return int(np.count_nonzero(self.labels == self.positive_class))

    def positions_of(self, ids: np.ndarray) -> np.ndarray:
        """Row positions of the given ids (ids must be present)."""
        ids = np.asarray(ids, dtype=np.int64)
        pos = np.searchsorted(self.ids, ids)
        if np.any(pos >= len(self)) or np.any(self.ids[np.minimum(pos, len(self) - 1)] != ids):
            missing = ids[(pos >= len(self)) | (self.ids[np.minimum(pos, len(self) - 1)] != ids)]
            raise KeyError(f"ids not in dataset: {missing[:5].tolist()}")
        return pos

    def take(self, positions: np.ndarray) -> "Dataset":
        """Sub-dataset at the given row positions, preserving original ids."""
        positions = np.sort(np.asarray(positions, dtype=np.int64))
        return Dataset(
            ids=self.ids[positions],
            features=self.features[positions],
            labels=self.labels[positions],
            num_classes=self.num_classes,
            positive_class=self.positive_class,
        )

    def fingerprint(self) -> str:
        """SHA-256 over the raw array bytes; equal datasets hash equally."""
        import hashlib

        h = hashlib.sha256()
        h.update(np.int64(len(self)).tobytes())
        h.update(np.int64(self.dimension).tobytes())
        h.update(self.ids.tobytes())
        h.update(self.features.tobytes())
        h.update(self.labels.tobytes())
        return h.hexdigest()


def from_arrays(features: np.ndarray, labels: np.ndarray, num_classes: int) -> Dataset:
    """Build a dataset with dense ids 0..n-1 from raw arrays."""
    features = np.asarray(features, dtype=np.float64)
    return Dataset(
        ids=np.arange(features.shape[0], dtype=np.int64),
        features=features,
        labels=np.asarray(labels, dtype=np.int64),
        num_classes=num_classes,
    )


def split_pool_validation(
    dataset: Dataset, validation_size: int, rng: RngStream
) -> tuple[Dataset, Dataset]:
    """Partition a dataset into (pool, validation) uniformly at random.

    Both parts preserve the original example ids, so the two id sets form an
    exact disjoint cover of the input's ids.
    """
    if not 0 <= validation_size < len(dataset):
        raise ValueError(
            f"validation_size must satisfy 0 <= size < {len(dataset)}, got {validation_size}"
        )
    gen = rng.generator()
    val_pos = gen.choice(len(dataset), size=validation_size, replace=False)
    mask = np.zeros(len(dataset), dtype=bool)
    mask[val_pos] = True
    return dataset.take(np.flatnonzero(~mask)), dataset.take(np.flatnonzero(mask))


def stratified_split(
    dataset: Dataset, validation_size: int, rng: RngStream
) -> tuple[Dataset, Dataset]:
    """Partition into (pool, validation) with the validation skew matched.

    The validation set receives round(skew * validation_size) positives drawn
    uniformly from the positives, and the rest negatives; both parts preserve
    ids.  Used when per-round metrics should not inherit split noise in the
    validation positive count.
    """
    if not 0 <= validation_size < len(dataset):
        raise ValueError(
            f"validation_size must satisfy 0 <= size < {len(dataset)}, got {validation_size}"
        )
    want_pos = int(round(dataset.skew * validation_size))
    pos_rows = np.flatnonzero(dataset.labels == dataset.positive_class)
    neg_rows = np.flatnonzero(dataset.labels != dataset.positive_class)
    want_pos = min(want_pos, len(pos_rows))
    want_neg = validation_size - want_pos
    if want_neg > len(neg_rows):
        raise ValueError("not enough negatives for a skew-matched validation split")
    gen = rng.generator()
    val_rows = np.concatenate(
        [
            gen.choice(pos_rows, size=want_pos, replace=False),
            gen.choice(neg_rows, size=want_neg, replace=False),
        ]
    )
    mask = np.zeros(len(dataset), dtype=bool)
    mask[val_rows] = True
    return dataset.take(np.flatnonzero(~mask)), dataset.take(np.flatnonzero(mask))


class PoolState:
    """Mutable partition of a pool dataset into unlabeled and labeled rows.

    Single-writer: one simulation owns and mutates a PoolState.  Rows move
    exactly once from unlabeled to labeled; their ground-truth labels are
    "revealed" at that point (the simulated oracle always answers).
    """

    def __init__(self, dataset: Dataset):
        self.dataset = dataset
        self._unlabeled = np.ones(len(dataset), dtype=bool)
        self._labeled = np.zeros(len(dataset), dtype=bool)
        self.round = 0

    @property
    def unlabeled_count(self) -> int:
        return int(np.count_nonzero(self._unlabeled))

    @property
    def labeled_count(self) -> int:
        return int(np.count_nonzero(self._labeled))

    def unlabeled_mask(self) -> np.ndarray:
        return self._unlabeled.copy()

    def labeled_positions(self) -> np.ndarray:
        """Row positions of labeled examples, ascending (therefore by id)."""
        return np.flatnonzero(self._labeled)

    def unlabeled_positions(self) -> np.ndarray:
        return np.flatnonzero(self._unlabeled)

    def reveal(self, positions: np.ndarray) -> np.ndarray:
        """Move rows from unlabeled to labeled; returns their true labels."""
        positions = np.asarray(positions, dtype=np.int64)
        if not np.all(self._unlabeled[positions]):
            raise ValueError("attempted to reveal a row that is not unlabeled")
        self._unlabeled[positions] = False
        self._labeled[positions] = True
        return self.dataset.labels[positions]

    def advance_round(self) -> None:
        self.round += 1
