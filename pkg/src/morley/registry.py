"""
Step Registry

Derivation steps, their results, and dependency-ordered selection.
"""

import logging
from dataclasses import asdict, dataclass, field
from enum import Enum
from fractions import Fraction
from typing import TYPE_CHECKING, Any, Callable, Dict, Iterable, List, Optional, Set, Tuple

from src.arith.rational import format_rational, parse_rational

if TYPE_CHECKING:
    from src.morley.context import DerivationContext
    from src.morley.evidence import Evidence


class StepStatus(str, Enum):
    """Verdict of one step"""

    VERIFIED = "verified"
    FAILED = "failed"
    SKIPPED = "skipped"


class CheckKind(str, Enum):
    """What kind of check a step performs"""

    NUMERIC = "numeric"
    POLY_IDENTITY = "poly-identity"
    SERIES = "series-coeff"
    RATFUNC = "ratfunc-identity"
    RESULTANT = "resultant"
    SIGN_CERTIFICATE = "sign-certificate"
    EXACT_TRIG = "exact-trig"


StepFn = Callable[["DerivationContext", "Evidence"], None]


@dataclass(frozen=True)
class DerivationStep:
    """One link of the derivation"""

    id: str
    claim: str
    check: CheckKind
    anchor: str
    run: StepFn = field(repr=False, compare=False)
    depends_on: Tuple[str, ...] = ()
    min_degree: int = 0
    primary_constant: Optional[str] = None


@dataclass
class StepResult:
    """Verdict record for one step"""

    id: str
    claim: str
    status: StepStatus
    anchor: str = ""
    check: str = ""
    witness: Dict[str, Any] = field(default_factory=dict)
    constants: Dict[str, Fraction] = field(default_factory=dict)
    primary_constant: Optional[str] = None
    millis: float = 0.0

    @property
    def verified(self) -> bool:
        return self.status == StepStatus.VERIFIED

    def constant(self) -> Fraction:
        """
        The step's derived proportionality constant

        Raises:
            ValueError: If the step recorded none
        """
        if self.primary_constant is None or self.primary_constant not in self.constants:
            raise ValueError(f"step {self.id} has no derived constant")
        return self.constants[self.primary_constant]

    def to_dict(self) -> Dict[str, Any]:
        """Convert to dictionary; rationals as "n/d" text"""
        data = asdict(self)
        data["status"] = self.status.value
        data["constants"] = {k: format_rational(v) for k, v in self.constants.items()}
        data["millis"] = round(self.millis, 3)
        return data

    @classmethod
    def from_dict(cls, data: Dict[str, Any]) -> "StepResult":
        """Create from dictionary"""
        values = dict(data)
        values["status"] = StepStatus(values["status"])
        values["constants"] = {
            k: parse_rational(v) for k, v in values.get("constants", {}).items()
        }
        return cls(**values)


class StepRegistry:
    """
    Registry of derivation steps

    Steps are kept in registration order; ``resolve_order`` returns a
    dependency-respecting order for any selection.
    """

    def __init__(self) -> None:
        self.steps: Dict[str, DerivationStep] = {}
        self.logger = logging.getLogger("step_registry")

    def register(self, step: DerivationStep) -> None:
        """
        Register a step

        Raises:
            ValueError: On a duplicate id
        """
        if step.id in self.steps:
            raise ValueError(f"step {step.id} already registered")
        self.steps[step.id] = step

    def get(self, step_id: str) -> DerivationStep:
        """
        Raises:
            KeyError: For an unknown id
        """
        try:
            return self.steps[step_id]
        except KeyError:
            raise KeyError(f"unknown step {step_id}") from None

    def ids(self) -> List[str]:
        return list(self.steps)

    def __contains__(self, step_id: object) -> bool:
        return step_id in self.steps

    def __len__(self) -> int:
        return len(self.steps)

    def unknown(self, step_ids: Iterable[str]) -> List[str]:
        return [step_id for step_id in step_ids if step_id not in self.steps]

    def min_degree(self, step_ids: Optional[Iterable[str]] = None) -> int:
        """Largest truncation degree the selection needs"""
        selected = self.ids() if step_ids is None else list(step_ids)
        return max((self.get(step_id).min_degree for step_id in selected), default=0)

    def resolve_order(self, step_ids: Optional[Iterable[str]] = None) -> Tuple[bool, List[str], List[str]]:
        """
        Order a selection so that selected dependencies come first

        Dependencies outside the selection are ignored. Ties keep
        registration order.

        Returns:
            Tuple of (success, order, errors)
        """
        selected = self.ids() if step_ids is None else list(dict.fromkeys(step_ids))
        missing = self.unknown(selected)
        if missing:
            return False, [], [f"Unknown step: {step_id}" for step_id in missing]

        position = {step_id: k for k, step_id in enumerate(self.steps)}
        chosen: Set[str] = set(selected)
        graph: Dict[str, Set[str]] = {step_id: set() for step_id in selected}
        in_degree: Dict[str, int] = {step_id: 0 for step_id in selected}
        for step_id in selected:
            for dep in self.steps[step_id].depends_on:
                if dep in chosen:
                    graph[dep].add(step_id)
                    in_degree[step_id] += 1

        # Kahn's algorithm
        queue = sorted((s for s, d in in_degree.items() if d == 0), key=position.get)
        order: List[str] = []
        while queue:
            current = queue.pop(0)
            order.append(current)
            for neighbor in graph[current]:
                in_degree[neighbor] -= 1
                if in_degree[neighbor] == 0:
                    queue.append(neighbor)
            queue.sort(key=position.get)

        if len(order) != len(selected):
            remaining = sorted(set(selected) - set(order), key=position.get)
            errors = [f"Circular dependency detected involving: {', '.join(remaining)}"]
            self.logger.error(errors[0])
            return False, [], errors
        return True, order, []
