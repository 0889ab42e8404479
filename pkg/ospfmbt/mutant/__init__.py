# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
The ospfmbt.mutant package provides deviating router behaviors.

Each deviation overrides hooks of :class:`.Behavior` and nothing else,
so a mutant differs from the reference model only where a deviating
implementation was seen to differ.  Deviations compose, and may be
limited to a subset of the routers.
"""

from typing import Sequence

class MutantSpecError(ValueError):
    """A mutant description could not be parsed"""
    _fmt = "`{}' is not a mutant description: {}"
    def __init__(self, spec: str, message: str) -> None:
        super().__init__(self._fmt.format(spec, message))
        self.spec = spec

class UnknownDeviationError(ValueError):
    """A mutant description named a deviation that does not exist"""
    _fmt = "unknown deviation `{}' (known: {})"
    def __init__(self, name: str, known: Sequence[str]) -> None:
        super().__init__(self._fmt.format(name, ", ".join(known)))
        self.name = name

from ospfmbt.mutant.catalog import DeviationId, MutantConfig, PRISTINE
from ospfmbt.mutant.catalog import parse_mutant_spec, format_mutant_spec
from ospfmbt.mutant.catalog import deviation_catalog
from ospfmbt.mutant.behavior import MutantBehavior, make_mutant

# ospfmbt.mutant.matrix runs the in-process adapter, which imports this
# package; import it directly.
