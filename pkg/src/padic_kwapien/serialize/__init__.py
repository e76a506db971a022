from . import csvio, jsonio

__all__ = ["csvio", "jsonio"]
