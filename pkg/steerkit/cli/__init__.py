"""steerkit cli module."""

# Project
from steerkit.cli.commands import steerkit

CLI = steerkit
