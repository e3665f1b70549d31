from importlib.metadata import PackageNotFoundError, version

try:
    version_number = version("drinfeld-forms")
except PackageNotFoundError:  # pragma: no cover
    # Running from a source checkout
    version_number = "0.0.0"
