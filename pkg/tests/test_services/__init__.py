# Tests for service modules
