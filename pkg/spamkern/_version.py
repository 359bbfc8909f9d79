"""``spamkern`` version information."""
# License: GNU AGPLv3

# PEP0440 compatible formatted version, see:
# https://www.python.org/dev/peps/pep-0440/
#
# Dev branch marker is: 'X.Y.dev' or 'X.Y.devN' where N is an integer.

__version__ = "0.1.0"
