from django.contrib import admin

from .models import RunRecord


@admin.register(RunRecord)
class RunRecordAdmin(admin.ModelAdmin):
    list_display = ("command", "tool_version", "exit_code", "output_digest", "created_at")
    list_filter = ("command", "exit_code", "tool_version", "created_at")
    search_fields = ("command", "input_digest", "output_digest")
    readonly_fields = ("created_at",)

    fieldsets = (
        ("Запуск", {"fields": ("command", "params", "seeds", "engines", "tool_version")}),
        ("Результат", {"fields": ("input_digest", "output_digest", "exit_code")}),
        ("Дата", {"fields": ("created_at",), "classes": ("collapse",)}),
    )
