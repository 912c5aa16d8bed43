"""
Tests for VerificationLogger.
"""

import json

from actorkit.logger import CheckStep, VerificationLogger


class TestVerificationLogger:
    """Test cases for VerificationLogger."""

    def setup_method(self):
        """Set up test fixtures."""
        self.logger = VerificationLogger()

    def _step(self, step_id: str, passed):
        return CheckStep(
            step_id=step_id,
            step_type="inn_map",
            description="Inn: X -> E(X)",
            input_data={"dim": 4},
            output_data={"bijective": passed},
            passed=passed,
        )

    def test_log_and_sequence(self):
        """Test that entries are numbered per run."""
        self.logger.log("start", {"a": 1}, "run1")
        self.logger.log("next", {"a": 2}, "run1")
        self.logger.log("other", {}, "run2")
        logs = self.logger.get_logs("run1")
        assert [entry["sequence"] for entry in logs] == [0, 1]
        assert [entry["step"] for entry in logs] == ["start", "next"]
        assert self.logger.list_runs() == ["run1", "run2"]

    def test_default_run(self):
        self.logger.log("start", {})
        assert self.logger.list_runs() == ["default"]

    def test_limit(self):
        for i in range(5):
            self.logger.log("step", {"i": i}, "run")
        assert len(self.logger.get_logs("run", limit=3)) == 3

    def test_check_steps_round_trip(self):
        """Test reading structured steps back from a run."""
        self.logger.log_check_step(self._step("s0", True), "run")
        self.logger.log_actor_computation("M2", "assoc", 4, run_id="run")
        self.logger.log_check_step(self._step("s1", False), "run")
        trace = self.logger.get_run_trace("run")
        assert [step.step_id for step in trace] == ["s0", "s1"]
        assert trace[1].passed is False
        assert trace[0].output_data == {"bijective": True}
        assert trace[0].timestamp

    def test_statistics(self):
        self.logger.log_check_step(self._step("s0", True), "run")
        self.logger.log_check_step(self._step("s1", False), "run")
        self.logger.log_error("PreconditionError", "not unital", {"algebra": "x-ideal"}, "run")
        stats = self.logger.get_log_statistics("run")
        assert stats["total_logs"] == 3
        assert stats["runs"] == 1
        assert stats["failed_checks"] == 1
        assert stats["errors"] == 1
        assert stats["step_types"] == {"check_inn_map": 2, "error": 1}

    def test_export(self):
        self.logger.log_actor_computation("F", "assoc", 1, num_constraints=3, run_id="run")
        exported = json.loads(self.logger.export_logs("run"))
        assert exported[0]["details"] == {"algebra": "F", "variety": "assoc", "dimension": 1, "num_constraints": 3}

    def test_clear(self):
        self.logger.log("a", {}, "run1")
        self.logger.log("b", {}, "run2")
        self.logger.clear("run1")
        assert self.logger.list_runs() == ["run2"]
        self.logger.clear()
        assert self.logger.get_logs() == []
