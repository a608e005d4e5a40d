# Tests for the management commands and their exit codes
