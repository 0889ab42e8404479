# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import Any, Callable, List, Optional

import importlib
import pkgutil

def autoload_submodules(caller: str,
                        callback: Optional[Callable[[Any], None]] = None
                        ) -> List[str]:
    """
    Import every module below a package, subpackages included.

    Args:
        caller: The name of the package
        callback: Called with every module imported

    Returns:
        :obj:`list` of :obj:`str`: The names of the modules, in the
        order they were imported
    """
    package = importlib.import_module(caller)
    mods = list()
    for info in sorted(pkgutil.iter_modules(package.__path__),
                       key=lambda info: info.name):
        if info.name.startswith("_"):
            continue
        modname = f"{caller}.{info.name}"
        mod = importlib.import_module(modname)
        if callback:
            callback(mod)
        mods.append(modname)
        if info.ispkg:
            mods += autoload_submodules(modname, callback)
    return mods
