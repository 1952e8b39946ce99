"""Define models for all config variables.

Import config variables and overrides default class attributes.
Validate input for overridden parameters.
"""
