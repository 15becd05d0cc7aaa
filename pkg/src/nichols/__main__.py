"""Allow ``python -m nichols`` as an alias for the ``nichols`` console script."""

from .cli import main

if __name__ == "__main__":
    raise SystemExit(main())
