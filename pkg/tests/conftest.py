from hypothesis import HealthCheck, settings

settings.register_profile(
    "stable",
    derandomize=True,
    max_examples=40,
    deadline=None,
    suppress_health_check=[HealthCheck.too_slow],
)
settings.load_profile("stable")
