"""Shared fixtures: parsed example nets and fixture-file helpers."""

from pathlib import Path

import pytest

from vpnet import parse_net

FIXTURES = Path(__file__).resolve().parent.parent / "fixtures"

FIXTURE_NAMES = (
    "ne1.vpn",
    "ne2.vpn",
    "ne3.vpn",
    "ne4.vpn",
    "dispatch.vpn",
    "grower.vpn",
)


def fixture_path(name: str) -> Path:
    return FIXTURES / name


def fixture_text(name: str) -> str:
    return fixture_path(name).read_text()


def load_net(name: str):
    return parse_net(fixture_text(name))


@pytest.fixture(scope="session")
def ne1():
    return load_net("ne1.vpn")


@pytest.fixture(scope="session")
def ne2():
    return load_net("ne2.vpn")


@pytest.fixture(scope="session")
def ne3():
    return load_net("ne3.vpn")


@pytest.fixture(scope="session")
def ne4():
    return load_net("ne4.vpn")


@pytest.fixture(scope="session")
def dispatch():
    return load_net("dispatch.vpn")


@pytest.fixture(scope="session")
def grower():
    return load_net("grower.vpn")


@pytest.fixture(scope="session")
def all_nets(ne1, ne2, ne3, ne4, dispatch, grower):
    return {
        "ne1": ne1,
        "ne2": ne2,
        "ne3": ne3,
        "ne4": ne4,
        "dispatch": dispatch,
        "grower": grower,
    }


@pytest.fixture(scope="session")
def omega_free_nets(ne1, ne2, ne3, ne4, dispatch):
    """The corpus nets whose coverability trees contain no omega counts."""
    return {
        "ne1": ne1,
        "ne2": ne2,
        "ne3": ne3,
        "ne4": ne4,
        "dispatch": dispatch,
    }
