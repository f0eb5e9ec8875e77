"""Job configuration and serialization shared by the command line and scripts."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass

import numpy as np

from .analysis.distance import DEFAULT_INFOSET_BUDGET
from .analysis.enumeration import DEFAULT_BUDGET
from .arith import crt_join
from .errors import DomainError, NotQRSettingError, UnsupportedError
from .gray_weights import WeightKind, gray_image_code
from .linear_code import LinearCode
from .qr_construct import (
    QRFamily,
    check_setting,
    extend,
    extension_constant,
    hermitian_augment,
    hermitian_augment_idempotent,
    qr_family,
)

SELECTORS = {"q1": "Q1", "q2": "Q2", "q1p": "Q1p", "q2p": "Q2p"}
AUGMENT_UNITS = {"v": "v", "1v": "1+v", "1+v": "1+v"}
FORMATS = ("json", "csv", "text")
STRATEGIES = ("auto", "exhaustive", "infoset")


@dataclass(frozen=True)
class JobConfig:
    p: int
    q: int
    code: str = "q1"
    extend: bool = False
    augment: str | None = None
    gray: bool = False
    weight: str = "lee"
    strategy: str = "auto"
    budget: int = DEFAULT_BUDGET
    infoset_budget: int = DEFAULT_INFOSET_BUDGET
    workers: int | None = None
    format: str = "json"

    def validate(self) -> JobConfig:
        """Reject bad selector/transform combinations before any computation."""
        check_setting(self.p, self.q)
        if self.code.lower() not in SELECTORS:
            raise DomainError(f"--code must be one of {', '.join(SELECTORS)}, got {self.code!r}")
        which = SELECTORS[self.code.lower()]
        if self.extend and self.augment:
            raise DomainError("--extend and --augment cannot be combined")
        if self.extend and which not in ("Q1", "Q2"):
            raise DomainError("--extend applies to q1 and q2 only")
        if self.augment is not None:
            if self.augment not in AUGMENT_UNITS:
                raise DomainError("--augment must be v or 1v")
            if self.p != 2 or self.q % 8 != 1:
                raise DomainError("--augment requires p=2 and q = 1 mod 8")
            if which not in ("Q1p", "Q2p"):
                raise DomainError("--augment applies to q1p and q2p only")
        kind = WeightKind.of(self.weight)
        if kind is WeightKind.BACHOC and self.p != 2:
            raise DomainError("the Bachoc weight requires p=2")
        if self.gray and kind is WeightKind.BACHOC:
            raise DomainError("Gray images are field codes; use --weight hamming or lee")
        if self.strategy not in STRATEGIES:
            raise DomainError(f"--strategy must be one of {', '.join(STRATEGIES)}")
        if self.format not in FORMATS:
            raise DomainError(f"--format must be one of {', '.join(FORMATS)}")
        if self.budget <= 0 or self.infoset_budget <= 0:
            raise DomainError("budgets must be positive")
        if self.workers is not None and self.workers < 1:
            raise DomainError("--workers must be at least 1")
        return self

    @property
    def which(self) -> str:
        return SELECTORS[self.code.lower()]

    @property
    def label(self) -> str:
        name = self.which
        if self.extend:
            name = f"ext({name})"
        if self.augment:
            name = f"{name}+<{AUGMENT_UNITS[self.augment]}>"
        return f"gray({name})" if self.gray else name

    def family(self) -> QRFamily:
        return qr_family(self.p, self.q)

    def build(self) -> LinearCode:
        F = self.family()
        if self.extend:
            C = extend(F, self.which)
        elif self.augment:
            C = hermitian_augment(F, self.which, AUGMENT_UNITS[self.augment])
        else:
            C = F.code(self.which)
        return gray_image_code(C) if self.gray else C

    def measured_kind(self) -> WeightKind:
        """Gray images carry the Hamming weight, which is the Lee weight upstairs."""
        return WeightKind.HAMMING if self.gray else WeightKind.of(self.weight)


def compact_generator(C: LinearCode) -> list[list[str]]:
    """Ring generator with max(k1, k2) rows: row i is (1-v) c1_i + v c2_i."""
    C1, C2 = C.components
    k = max(C1.shape[0], C2.shape[0])
    rows = []
    for i in range(k):
        s = C1[i] if i < C1.shape[0] else np.zeros(C.n, dtype=np.int64)
        t = C2[i] if i < C2.shape[0] else np.zeros(C.n, dtype=np.int64)
        rows.append([str(crt_join(int(a), int(b), C.p)) for a, b in zip(s, t)])
    return rows


def code_descriptor(cfg: JobConfig, C: LinearCode) -> dict:
    F = cfg.family()
    out = {
        "parameters": {k: v for k, v in asdict(cfg).items() if k in ("p", "q", "code", "extend", "augment", "gray")},
        "label": cfg.label,
        "length": C.n,
        "alphabet": C.alphabet,
        "cardinality": f"{C.p}^{C.card_exponent}",
        "crt_dims": list(C.dims),
    }
    if cfg.extend:
        out["idempotent"] = str(F.idempotent(cfg.which + "p"))
        out["extension_constant"] = extension_constant(F, cfg.which)
    elif cfg.augment:
        out["idempotent"] = str(hermitian_augment_idempotent(F, cfg.which, AUGMENT_UNITS[cfg.augment]))
    else:
        out["idempotent"] = str(F.idempotent(cfg.which))
    if C.is_ring:
        out["generator"] = compact_generator(C)
    else:
        out["generator"] = C.generator.tolist()
    return out


def dumps(obj) -> str:
    return json.dumps(obj, indent=2) + "\n"


def is_config_error(exc: BaseException) -> bool:
    return isinstance(exc, (DomainError, NotQRSettingError, UnsupportedError))
