import sys
from typing import List, Optional

from pydantic import ValidationError

from .arguments import get_args
from .bench import cmd_bench
from .detect import cmd_detect
from .enums import Mode
from .generate import cmd_gen
from .selftest import cmd_selftest


def run(argv: Optional[List[str]] = None) -> int:
    mode, args = get_args(argv)

    if mode == Mode.detect:
        cmd_detect(args)
    elif mode == Mode.generate:
        cmd_gen(args)
    elif mode == Mode.bench:
        cmd_bench(args)
    elif mode == Mode.selftest:
        return 0 if cmd_selftest(args) else 1
    else:
        raise ValueError(f"unexpected mode ({mode})")

    return 0


def main(argv: Optional[List[str]] = None) -> int:
    """command line entry point, domain and config errors become a one line message and exit code 1"""

    try:
        return run(argv)
    except (ValueError, AssertionError, OSError) as error:
        if isinstance(error, ValidationError):
            message = "; ".join(f"{'.'.join(map(str, e['loc']))}: {e['msg']}" for e in error.errors())
        else:
            message = str(error)

        print(f"error: {message}", file=sys.stderr)
        return 1


if __name__ == "__main__":
    sys.exit(main())
