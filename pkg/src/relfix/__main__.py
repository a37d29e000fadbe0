"""
Run the relfix command line: python -m relfix.

File:       __main__.py
Author:     Lorn B Kerr
Copyright:  (c) 2026 Lorn B Kerr
License:    MIT, see file LICENSE
"""

from .cli import main

if __name__ == "__main__":
    main()
