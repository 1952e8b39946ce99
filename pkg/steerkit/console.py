#!/usr/bin/env python3
"""steerkit command line tool."""

# Project
from steerkit.cli import CLI

if __name__ == "__main__":
    CLI()
