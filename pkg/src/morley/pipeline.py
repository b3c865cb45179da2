"""
Derivation Pipeline

Runs a selection of registry steps in dependency order against one shared
DerivationContext and turns each step's evidence into a StepResult.
"""

import logging
import time
from fractions import Fraction
from typing import TYPE_CHECKING, Iterable, List, Optional, Sequence

from tqdm import tqdm

from src.morley.context import DerivationContext
from src.morley.displays import DisplayCatalog
from src.morley.evidence import Evidence
from src.morley.registry import DerivationStep, StepRegistry, StepResult, StepStatus
from src.morley.steps import default_registry

if TYPE_CHECKING:
    from src.core.config import RunConfig


class DerivationPipeline:
    """
    Sequential step runner

    A step whose selected dependency did not verify is skipped. Exceptions
    raised inside a step are caught and reported as a failed step.

    Args:
        registry: Step registry (the S01..S37 registry by default)
        context: Shared derivation state
        progress: Show a tqdm progress bar over the steps
    """

    def __init__(
        self,
        registry: Optional[StepRegistry] = None,
        context: Optional[DerivationContext] = None,
        progress: bool = False,
    ) -> None:
        self.registry = registry if registry is not None else default_registry()
        self.context = context if context is not None else DerivationContext()
        self.progress = progress
        self.logger = logging.getLogger("derivation_pipeline")

    def run(self, step_ids: Optional[Iterable[str]] = None) -> List[StepResult]:
        """
        Run the selected steps (all when step_ids is None)

        Raises:
            ValueError: On unknown ids or a dependency cycle
        """
        ok, order, errors = self.registry.resolve_order(step_ids)
        if not ok:
            raise ValueError("; ".join(errors))
        if not order:
            self.logger.warning("empty step selection")
            return []

        results: List[StepResult] = []
        not_verified = set()
        for step_id in tqdm(order, desc="steps", unit="step", disable=not self.progress):
            step = self.registry.get(step_id)
            blocked = [dep for dep in step.depends_on if dep in not_verified]
            if blocked:
                result = self._skipped(step, blocked)
            else:
                result = self.run_step(step)
            if not result.verified:
                not_verified.add(step_id)
            results.append(result)
        return results

    def run_step(self, step: DerivationStep) -> StepResult:
        """Run one step, ignoring its dependencies"""
        self.logger.info(f"{step.id} started: {step.claim}")
        evidence = Evidence(step.id)
        start = time.perf_counter()
        try:
            step.run(self.context, evidence)
            status = StepStatus.VERIFIED if evidence.passed else StepStatus.FAILED
            witness = evidence.to_witness()
        except Exception as e:
            self.logger.error(f"{step.id} raised {type(e).__name__}: {e}")
            status = StepStatus.FAILED
            witness = {"error": f"{type(e).__name__}: {e}"}
            if evidence.checks:
                witness["checks"] = [check.to_dict() for check in evidence.failures]
        millis = (time.perf_counter() - start) * 1000.0
        self.logger.info(f"{step.id} {status.value} in {millis:.1f} ms")
        return StepResult(
            id=step.id,
            claim=step.claim,
            status=status,
            anchor=step.anchor,
            check=step.check.value,
            witness=witness,
            constants=dict(evidence.constants),
            primary_constant=step.primary_constant,
            millis=millis,
        )

    def _skipped(self, step: DerivationStep, blocked: Sequence[str]) -> StepResult:
        self.logger.warning(f"{step.id} skipped: {', '.join(blocked)} not verified")
        return StepResult(
            id=step.id,
            claim=step.claim,
            status=StepStatus.SKIPPED,
            anchor=step.anchor,
            check=step.check.value,
            witness={"blocked_by": list(blocked)},
            primary_constant=step.primary_constant,
        )


def run_pipeline(
    config: "RunConfig",
    catalog: Optional[DisplayCatalog] = None,
    registry: Optional[StepRegistry] = None,
) -> List[StepResult]:
    """
    Run the steps a RunConfig selects

    Args:
        config: Validated run configuration
        catalog: Display catalog override (fault injection)
        registry: Registry override

    Returns:
        One StepResult per selected step, in execution order
    """
    context = DerivationContext(
        degree=config.degree,
        precision_bits=config.precision_bits,
        displays=catalog,
        params=config.cevian_params(),
    )
    pipeline = DerivationPipeline(registry, context, progress=config.progress)
    return pipeline.run(config.selected_steps())


def derived_constant(results: Sequence[StepResult], step_id: str) -> Fraction:
    """
    The proportionality constant a step derived

    Raises:
        KeyError: If the step is not among the results
        ValueError: If the step recorded no constant
    """
    for result in results:
        if result.id == step_id:
            return result.constant()
    raise KeyError(f"no result for step {step_id}")
