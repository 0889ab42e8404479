# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:
"""
Extension points of the router procedure.

Every decision that deviating implementations are known to make
differently goes through a :class:`Behavior` method.  The base class is
the reference behavior; ``ospfmbt.mutant`` subclasses it.
"""

from typing import Tuple, TYPE_CHECKING

from ospfmbt.model.lsa import Lsa, Link, LsaKey, LsaMessage, Ordering

if TYPE_CHECKING:
    from ospfmbt.model.engine import OspfModel
    from ospfmbt.model.state import NetworkState

class Behavior:
    """The standard router behavior"""
    name = "reference"

    def lsdb_key(self, lsa: Lsa) -> LsaKey:
        return lsa.key

    def compare(self, model: 'OspfModel', received: Lsa,
                installed: Lsa) -> Ordering:
        return model.is_newer(received, installed)

    def flood_first(self, router: int) -> bool:
        """Whether a received LSA is flooded before the self-origination
        check"""
        return False

    def suppress_reflood(self, router: int, msg: LsaMessage) -> bool:
        """Whether an LSA that arrived from the DR stays off the network
        it arrived on"""
        return True

    def flush_links(self, model: 'OspfModel', router: int,
                    false_lsa: Lsa) -> Tuple[Link, ...]:
        """The links carried by the MaxSeqNum flush of a wrap"""
        return false_lsa.links

    def originate_after_flush(self, router: int) -> bool:
        return True

    def on_stale_self_originated(self, model: 'OspfModel',
                                 state: 'NetworkState', router: int,
                                 msg: LsaMessage) -> None:
        """
        A newer LSA claiming ``router`` as advertising router arrived for
        a key the router does not originate.
        """
        model.premature_flush(state, router, msg.lsa)

    def on_flush_received(self, model: 'OspfModel', state: 'NetworkState',
                          router: int, msg: LsaMessage,
                          installed: Lsa) -> bool:
        """
        A newer MaxAge instance of an installed LSA arrived.

        Returns:
            :obj:`bool`: Whether to accept and flood it
        """
        return True

    def on_repeat_fight_back(self, model: 'OspfModel', state: 'NetworkState',
                             router: int, msg: LsaMessage, installed: Lsa,
                             order: Ordering) -> None:
        """A self-originated LSA that is not newer arrived"""

    def on_older_received(self, model: 'OspfModel', state: 'NetworkState',
                          router: int, msg: LsaMessage, installed: Lsa,
                          order: Ordering) -> None:
        """A foreign LSA that is not newer than the installed one arrived"""

REFERENCE = Behavior()
