from .registry import CheckRegistry
from .registry import CheckResult
from .suite import build_registry
from .suite import verify_suite

__all__ = ["CheckRegistry", "CheckResult", "build_registry", "verify_suite"]
