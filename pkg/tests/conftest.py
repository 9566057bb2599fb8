import hypothesis

# deterministic suite: derandomized, no deadline flakes on slow CI boxes
hypothesis.settings.register_profile(
    "suite", max_examples=60, deadline=None, derandomize=True
)
hypothesis.settings.load_profile("suite")
