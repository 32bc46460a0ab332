"""Run history for `verify --record`."""
from django.db import models


class VerificationRun(models.Model):
    """
    One invocation of the verification harness over an (n, utility) grid.
    """
    started_at = models.DateTimeField(help_text="When enumeration started")
    finished_at = models.DateTimeField(null=True, blank=True)
    n_max = models.PositiveIntegerField()
    grid = models.CharField(max_length=500, help_text="Utility grid description")
    mutated = models.BooleanField(default=False, help_text="Harness self-test with a perturbed closed form")
    passed = models.BooleanField(default=False)

    class Meta:
        ordering = ["-started_at"]

    def __str__(self):
        status = "passed" if self.passed else "FAILED"
        return f"Run {self.id} (n<={self.n_max}) at {self.started_at:%Y-%m-%d %H:%M}: {status}"

    @property
    def duration(self):
        if self.finished_at is None:
            return None
        return self.finished_at - self.started_at


class VerificationCell(models.Model):
    """
    Result for one (n, utility, beta) cell of a run.
    """
    run = models.ForeignKey(VerificationRun, on_delete=models.CASCADE, related_name="cells")
    n = models.PositiveIntegerField()
    utility = models.JSONField(help_text="Utility spec as {family, params, beta}")
    beta = models.CharField(max_length=64)
    best_value = models.CharField(max_length=128)
    closed_form_value = models.CharField(max_length=128)
    graph_count = models.PositiveIntegerField(default=0)
    passed = models.BooleanField(default=False)
    report = models.JSONField(default=dict)

    class Meta:
        ordering = ["run", "n", "id"]
        indexes = [
            models.Index(fields=["run", "n"], name="oracle_cell_run_n_idx"),
        ]

    def __str__(self):
        family = self.utility.get("family", "?") if isinstance(self.utility, dict) else "?"
        status = "ok" if self.passed else "FAIL"
        return f"n={self.n} {family} beta={self.beta}: {status}"
