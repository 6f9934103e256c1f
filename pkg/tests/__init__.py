# qbi-verify test suite
