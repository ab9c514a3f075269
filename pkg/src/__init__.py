"""Multiaccess and device-to-device coded caching from combinatorial designs."""
