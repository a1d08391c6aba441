pytest_plugins = [
    "nearspace.topology.test_fixtures",
]
