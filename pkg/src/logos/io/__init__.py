from logos.io.codec import dumps, read, write
from logos.io.dot import graph_to_dot
from logos.io.fixtures import fixture_names, load_fixture, load_state
from logos.io.workspace import Workspace

__all__ = [
    "dumps",
    "read",
    "write",
    "graph_to_dot",
    "fixture_names",
    "load_fixture",
    "load_state",
    "Workspace",
]
