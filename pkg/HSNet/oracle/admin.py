from django.contrib import admin
from .models import VerificationCell, VerificationRun


class VerificationCellInline(admin.TabularInline):
    model = VerificationCell
    extra = 0
    fields = ["n", "beta", "best_value", "closed_form_value", "graph_count", "passed"]
    readonly_fields = fields


@admin.register(VerificationRun)
class VerificationRunAdmin(admin.ModelAdmin):
    list_display = ["id", "started_at", "n_max", "grid", "mutated", "passed"]
    list_filter = ["passed", "mutated", "started_at"]
    search_fields = ["grid"]
    readonly_fields = ["started_at", "finished_at"]
    inlines = [VerificationCellInline]


@admin.register(VerificationCell)
class VerificationCellAdmin(admin.ModelAdmin):
    list_display = ["id", "run", "n", "family", "beta", "best_value", "closed_form_value", "passed"]
    list_filter = ["passed", "n"]
    search_fields = ["beta", "best_value"]
    readonly_fields = ["report"]

    def family(self, obj):
        return obj.utility.get("family", "") if isinstance(obj.utility, dict) else ""
    family.short_description = "Utility"
