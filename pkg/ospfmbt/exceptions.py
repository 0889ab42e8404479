# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Type, Any

class OspfMbtError(RuntimeError):
    """Base class for errors raised by the testing tool itself"""

class ConfigError(OspfMbtError):
    """A configuration value is out of range or inconsistent"""
    _fmt = "invalid configuration value for `{}': {}"
    def __init__(self, name: str, message: str) -> None:
        super().__init__(self._fmt.format(name, message))
        self.name = name

class FormatVersionError(OspfMbtError):
    """A file was written by an incompatible version of the tool"""
    _fmt = "{}: expected format `{}' version {}, found `{}' version {}"
    def __init__(self, path: str, expected_format: str, expected_version: int,
                 found_format: Any, found_version: Any) -> None:
        msg = self._fmt.format(path, expected_format, expected_version,
                               found_format, found_version)
        super().__init__(msg)

class CorruptedFileError(OspfMbtError):
    """A suite, verdict, or topology file could not be parsed."""
    _fmt = "{}: {}"
    def __init__(self, path: str, message: str) -> None:
        super().__init__(self._fmt.format(path, message))
        self.path = path

class InvalidArgumentError(TypeError):
    """Base class for invalid argument exceptions"""

class ArgumentTypeError(InvalidArgumentError):
    """The provided object could not be converted to the expected type"""
    _fmt = "cannot convert argument `{}' of type {} to {}"

    def __init__(self, name: str, val: Any, expected_type: Type) -> None:
        msg = self._fmt.format(name, self.format_clsname(val.__class__),
                               self.format_clsname(expected_type))
        super().__init__(msg)
        self.val = val

    def format_clsname(self, cls: Type) -> str:
        module = cls.__module__
        if module is None or module == str.__class__.__module__:
            return cls.__name__  # Avoid reporting __builtin__
        return module + '.' + cls.__name__
