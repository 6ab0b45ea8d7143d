"""Linguistic rating scales and label conversion."""

from __future__ import annotations

from dataclasses import dataclass

from ..errors import InputError
from .values import IVNN, SVNN


@dataclass(frozen=True)
class LinguisticScale:
    """Ordered (label, value) pairs; labels unique."""

    name: str
    entries: tuple

    def __post_init__(self):
        labels = [lab for lab, _ in self.entries]
        if len(set(labels)) != len(labels):
            raise InputError("duplicate labels in scale %r" % self.name, kind="scale")

    def labels(self):
        return tuple(lab for lab, _ in self.entries)

    def value_for(self, label):
        for lab, val in self.entries:
            if lab == label:
                return val
        raise InputError(
            "unknown label %r for scale %r (known: %s)"
            % (label, self.name, ", ".join(self.labels())),
            kind="scale",
        )


def linguistic_to_value(label, scale: LinguisticScale):
    """Look a label up in a scale; unknown labels raise naming the label."""
    return scale.value_for(label)


# nine-level interval scale from extremely good down to extremely low
NINE_LEVEL_IVNN = LinguisticScale(
    "ivnn-9",
    (
        ("EG", IVNN((0.95, 1.0), (0.05, 0.1), (0.0, 0.1))),
        ("VG", IVNN((0.75, 0.95), (0.1, 0.15), (0.1, 0.2))),
        ("G", IVNN((0.6, 0.75), (0.1, 0.2), (0.2, 0.25))),
        ("MG", IVNN((0.5, 0.6), (0.2, 0.25), (0.25, 0.35))),
        ("M", IVNN((0.4, 0.5), (0.2, 0.3), (0.35, 0.45))),
        ("ML", IVNN((0.3, 0.4), (0.15, 0.25), (0.45, 0.5))),
        ("L", IVNN((0.2, 0.3), (0.1, 0.2), (0.5, 0.65))),
        ("VL", IVNN((0.05, 0.2), (0.1, 0.15), (0.65, 0.8))),
        ("EL", IVNN((0.0, 0.05), (0.05, 0.1), (0.8, 0.95))),
    ),
)

# five-level single valued scale, very poor to excellent; i = f = 1 - t
FIVE_LEVEL_SVNN = LinguisticScale(
    "svnn-5",
    (
        ("VP", SVNN(0.05, 0.95, 0.95)),
        ("P", SVNN(0.25, 0.75, 0.75)),
        ("G", SVNN(0.5, 0.5, 0.5)),
        ("VG", SVNN(0.75, 0.25, 0.25)),
        ("EX", SVNN(0.95, 0.05, 0.05)),
    ),
)

SCALES = {s.name: s for s in (NINE_LEVEL_IVNN, FIVE_LEVEL_SVNN)}


def get_scale(name):
    try:
        return SCALES[name]
    except KeyError:
        raise InputError(
            "unknown scale %r (known: %s)" % (name, ", ".join(sorted(SCALES))), kind="scale"
        )
