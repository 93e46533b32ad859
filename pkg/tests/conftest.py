from hypothesis import HealthCheck, settings

# the library is deterministic, so a fixed hypothesis seed keeps test runs reproducible
settings.register_profile(
    "repo",
    deadline=None,
    derandomize=True,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("repo")
