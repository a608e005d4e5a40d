# Generated by Django 5.0.6 on 2026-10-17 10:12

from django.db import migrations, models


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name="RunRecord",
            fields=[
                (
                    "id",
                    models.BigAutoField(
                        auto_created=True,
                        primary_key=True,
                        serialize=False,
                        verbose_name="ID",
                    ),
                ),
                ("command", models.CharField(max_length=100, verbose_name="Команда")),
                ("params", models.JSONField(default=dict, verbose_name="Параметры")),
                ("seeds", models.JSONField(blank=True, default=list, verbose_name="Зерна")),
                ("engines", models.JSONField(blank=True, default=list, verbose_name="Движки")),
                (
                    "tool_version",
                    models.CharField(max_length=20, verbose_name="Версия инструмента"),
                ),
                (
                    "input_digest",
                    models.CharField(blank=True, max_length=64, verbose_name="Хеш входа"),
                ),
                (
                    "output_digest",
                    models.CharField(blank=True, max_length=64, verbose_name="Хеш результата"),
                ),
                (
                    "exit_code",
                    models.PositiveSmallIntegerField(
                        choices=[
                            (0, "Успешно"),
                            (2, "Расхождение вердиктов"),
                            (3, "Нарушение аксиом"),
                            (4, "Некорректный ввод"),
                            (64, "Ошибка вызова"),
                        ],
                        default=0,
                        verbose_name="Код завершения",
                    ),
                ),
                (
                    "created_at",
                    models.DateTimeField(auto_now_add=True, verbose_name="Дата запуска"),
                ),
            ],
            options={
                "verbose_name": "Запуск",
                "verbose_name_plural": "Запуски",
                "ordering": ["-created_at"],
                "indexes": [
                    models.Index(fields=["command"], name="idx_runrecord_command"),
                    models.Index(fields=["output_digest"], name="idx_runrecord_output"),
                ],
            },
        ),
    ]
