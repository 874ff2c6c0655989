"""Entry point for ``python -m planarbook``."""

from .cli import main

if __name__ == "__main__":
    main()
