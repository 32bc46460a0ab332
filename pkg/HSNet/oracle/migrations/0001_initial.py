"""Initial models for oracle app."""
from django.db import migrations, models
import django.db.models.deletion


class Migration(migrations.Migration):

    initial = True

    dependencies = []

    operations = [
        migrations.CreateModel(
            name='VerificationRun',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('started_at', models.DateTimeField(help_text='When enumeration started')),
                ('finished_at', models.DateTimeField(blank=True, null=True)),
                ('n_max', models.PositiveIntegerField()),
                ('grid', models.CharField(help_text='Utility grid description', max_length=500)),
                ('mutated', models.BooleanField(default=False, help_text='Harness self-test with a perturbed closed form')),
                ('passed', models.BooleanField(default=False)),
            ],
            options={
                'ordering': ['-started_at'],
            },
        ),
        migrations.CreateModel(
            name='VerificationCell',
            fields=[
                ('id', models.BigAutoField(auto_created=True, primary_key=True, serialize=False, verbose_name='ID')),
                ('n', models.PositiveIntegerField()),
                ('utility', models.JSONField(help_text='Utility spec as {family, params, beta}')),
                ('beta', models.CharField(max_length=64)),
                ('best_value', models.CharField(max_length=128)),
                ('closed_form_value', models.CharField(max_length=128)),
                ('graph_count', models.PositiveIntegerField(default=0)),
                ('passed', models.BooleanField(default=False)),
                ('report', models.JSONField(default=dict)),
                ('run', models.ForeignKey(on_delete=django.db.models.deletion.CASCADE, related_name='cells', to='oracle.verificationrun')),
            ],
            options={
                'ordering': ['run', 'n', 'id'],
            },
        ),
        migrations.AddIndex(
            model_name='verificationcell',
            index=models.Index(fields=['run', 'n'], name='oracle_cell_run_n_idx'),
        ),
    ]
