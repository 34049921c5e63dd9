import os
from dataclasses import dataclass, field

from .errors import ValidationError

N_MAX = 8
BUDGET = 10**7
REGION_N_MAX = 6

ENV_N_MAX = "SIGNEDCHROM_N_MAX"
ENV_BUDGET = "SIGNEDCHROM_BUDGET"


@dataclass(frozen=True)
class Limits:
    """Enumeration bounds.

    n_max caps exhaustive walks over the hyperoctahedral group and over
    L(BC_n); budget caps the number of points a brute-force coloring count
    may visit.
    """
    n_max: int = N_MAX
    budget: int = BUDGET

    def __post_init__(self):
        if self.n_max <= 0 or self.budget <= 0:
            raise ValidationError("bounds must be positive")

    @classmethod
    def from_env(cls, environ=None):
        environ = os.environ if environ is None else environ
        return cls(
            n_max=int(environ.get(ENV_N_MAX, N_MAX)),
            budget=int(environ.get(ENV_BUDGET, BUDGET)),
        )


@dataclass(frozen=True)
class RunConfig:
    command: str
    inputs: tuple = ()
    k_range: tuple = (0, 1, 2, 3)
    limits: Limits = field(default_factory=Limits)
    output: str = "json"
    sign_rule: str = "derived"

    def __post_init__(self):
        if not self.k_range:
            raise ValidationError("k-range must be nonempty")
        if self.output not in ("json", "text"):
            raise ValidationError(f"unknown output format {self.output!r}")
        if self.sign_rule not in ("derived", "literal"):
            raise ValidationError(f"unknown sign rule {self.sign_rule!r}")
