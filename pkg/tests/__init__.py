"""
Tests package for actorkit.
""" 