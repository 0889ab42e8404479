# -*- coding: utf-8 -*-
# vim:set shiftwidth=4 softtabstop=4 expandtab textwidth=79:

from typing import List, Optional

import argparse
import sys

from ospfmbt.session import Session

def main(argv: Optional[List[str]] = None) -> int:
    parser = argparse.ArgumentParser(
        prog="ospfmbt",
        description="Model-based black-box testing of OSPF flooding")
    parser.add_argument('-v', '--verbose', action='store_true',
                        help="log progress")
    parser.add_argument('--debug', action='store_true',
                        help="log every step")
    parser.add_argument('command', nargs='?', default='help')
    parser.add_argument('args', nargs=argparse.REMAINDER)
    args = parser.parse_args(argv)

    session = Session(verbose=args.verbose, debug=args.debug)
    return session.run(args.command, args.args)

if __name__ == '__main__':
    sys.exit(main())
