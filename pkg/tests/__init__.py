"""Test suite for the ratio-set workbench."""
