"""Core functionality shared by every part of the library: configuration and errors."""
