from django.db import models


class RunRecord(models.Model):
    """Запись о запуске команды (манифест прогона)"""

    STATUS_CHOICES = [
        (0, "Успешно"),
        (2, "Расхождение вердиктов"),
        (3, "Нарушение аксиом"),
        (4, "Некорректный ввод"),
        (64, "Ошибка вызова"),
    ]

    command = models.CharField(max_length=100, verbose_name="Команда")
    params = models.JSONField(default=dict, verbose_name="Параметры")
    seeds = models.JSONField(default=list, blank=True, verbose_name="Зерна")
    engines = models.JSONField(default=list, blank=True, verbose_name="Движки")
    tool_version = models.CharField(max_length=20, verbose_name="Версия инструмента")
    input_digest = models.CharField(max_length=64, blank=True, verbose_name="Хеш входа")
    output_digest = models.CharField(max_length=64, blank=True, verbose_name="Хеш результата")
    exit_code = models.PositiveSmallIntegerField(
        choices=STATUS_CHOICES, default=0, verbose_name="Код завершения"
    )
    created_at = models.DateTimeField(auto_now_add=True, verbose_name="Дата запуска")

    class Meta:
        verbose_name = "Запуск"
        verbose_name_plural = "Запуски"
        ordering = ["-created_at"]
        indexes = [
            models.Index(fields=["command"], name="idx_runrecord_command"),
            models.Index(fields=["output_digest"], name="idx_runrecord_output"),
        ]

    def __str__(self):
        return f"{self.command} ({self.get_exit_code_display()})"

    @property
    def succeeded(self) -> bool:
        return self.exit_code == 0

    def same_output_as(self, other: "RunRecord") -> bool:
        """Runs with equal manifests must produce byte-identical artifacts."""
        return bool(self.output_digest) and self.output_digest == other.output_digest
