"""
End-to-end tests for the verify command.

These tests run the command-line entry point and check its exit codes and reports.
"""
