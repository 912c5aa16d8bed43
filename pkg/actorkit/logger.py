"""
Verification Logger Module

Structured, in-memory trace of theorem verifications and actor computations.
"""

import json
import logging
from dataclasses import asdict, dataclass, field
from datetime import datetime, timezone
from typing import Any, Dict, List, Optional


@dataclass
class CheckStep:
    """A single step of a theorem verification."""
    step_id: str
    step_type: str  # "load", "actor", "inn_map", "identity", "enumeration", "verdict"
    description: str
    input_data: Dict[str, Any]
    output_data: Dict[str, Any]
    passed: Optional[bool] = None
    metadata: Dict[str, Any] = field(default_factory=dict)
    timestamp: str = ""


class VerificationLogger:
    """
    Logs verification traces keyed by run.

    Entries are ``{run_id, sequence, timestamp, step, details}`` dictionaries;
    ``sequence`` orders the entries of a run independently of the clock.
    """

    def __init__(self, default_run: str = "default"):
        """
        Initialize the logger.

        Args:
            default_run: Run identifier used when none is given
        """
        self.default_run = default_run
        self._logs: Dict[str, List[Dict[str, Any]]] = {}
        self._logger = logging.getLogger(__name__)

    @staticmethod
    def _now() -> str:
        return datetime.now(timezone.utc).isoformat()

    def log(self, step: str, details: Dict[str, Any], run_id: Optional[str] = None) -> None:
        """
        Log a step.

        Args:
            step: Step name
            details: Step details
            run_id: Optional run identifier
        """
        run_id = run_id or self.default_run
        entries = self._logs.setdefault(run_id, [])
        entries.append(
            {
                "run_id": run_id,
                "sequence": len(entries),
                "timestamp": self._now(),
                "step": step,
                "details": details,
            }
        )
        self._logger.debug(f"[{run_id}] {step}")

    def log_check_step(self, check_step: CheckStep, run_id: Optional[str] = None) -> None:
        """Log a structured CheckStep."""
        details = asdict(check_step)
        details.pop("timestamp")
        self.log(f"check_{check_step.step_type}", details, run_id)

    def log_actor_computation(
        self,
        algebra: str,
        variety: str,
        dimension: int,
        num_constraints: Optional[int] = None,
        run_id: Optional[str] = None,
    ) -> None:
        """
        Log the result of an actor-space computation.

        Args:
            algebra: Algebra name
            variety: Variety (or construction) name
            dimension: Dimension of the computed space
            num_constraints: Number of linear constraints, if known
            run_id: Optional run identifier
        """
        details = {
            "algebra": algebra,
            "variety": variety,
            "dimension": dimension,
            "num_constraints": num_constraints,
        }
        self.log("actor_computation", details, run_id)

    def log_error(
        self,
        error_type: str,
        error_message: str,
        context: Optional[Dict[str, Any]] = None,
        run_id: Optional[str] = None,
    ) -> None:
        details = {
            "error_type": error_type,
            "error_message": error_message,
            "context": context or {},
        }
        self.log("error", details, run_id)

    def get_logs(self, run_id: Optional[str] = None, limit: int = 1000) -> List[Dict[str, Any]]:
        """
        Get log entries in logging order.

        Args:
            run_id: Restrict to one run; all runs when None
            limit: Maximum number of entries

        Returns:
            List of log entries
        """
        if run_id is not None:
            entries = list(self._logs.get(run_id, []))
        else:
            entries = [entry for run in self._logs.values() for entry in run]
        return entries[:limit]

    def list_runs(self) -> List[str]:
        return list(self._logs.keys())

    def get_run_trace(self, run_id: str) -> List[CheckStep]:
        """
        Structured check steps of a run.

        Args:
            run_id: Run identifier

        Returns:
            List of CheckStep objects in logging order
        """
        steps = []
        for entry in self.get_logs(run_id):
            if not entry["step"].startswith("check_"):
                continue
            details = entry["details"]
            steps.append(
                CheckStep(
                    step_id=details.get("step_id", ""),
                    step_type=details.get("step_type", ""),
                    description=details.get("description", ""),
                    input_data=details.get("input_data", {}),
                    output_data=details.get("output_data", {}),
                    passed=details.get("passed"),
                    metadata=details.get("metadata", {}),
                    timestamp=entry["timestamp"],
                )
            )
        return steps

    def export_logs(self, run_id: Optional[str] = None) -> str:
        """Export logs as a JSON string."""
        return json.dumps(self.get_logs(run_id), indent=2, default=str)

    def get_log_statistics(self, run_id: Optional[str] = None) -> Dict[str, Any]:
        """
        Counts per step name, failed checks and errors.

        Args:
            run_id: Restrict to one run; all runs when None
        """
        logs = self.get_logs(run_id)
        step_types: Dict[str, int] = {}
        errors = 0
        failed_checks = 0
        for entry in logs:
            step = entry["step"]
            step_types[step] = step_types.get(step, 0) + 1
            if step == "error":
                errors += 1
            elif step.startswith("check_") and entry["details"].get("passed") is False:
                failed_checks += 1
        return {
            "run_id": run_id,
            "total_logs": len(logs),
            "runs": len({entry["run_id"] for entry in logs}),
            "step_types": step_types,
            "failed_checks": failed_checks,
            "errors": errors,
        }

    def clear(self, run_id: Optional[str] = None) -> None:
        if run_id is None:
            self._logs.clear()
        else:
            self._logs.pop(run_id, None)
