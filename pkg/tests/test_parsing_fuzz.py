"""Malformed text inputs must fail with ParseError, never anything else."""

import random
import string

import pytest

from bredim.errors import ParseError
from bredim.gog import parse_gog
from bredim.homology import read_chain_complex
from bredim.lattice import read_lattice, read_matrix
from bredim.raag import parse_dimacs, parse_graph, read_graph

READERS = [
    read_lattice,
    read_matrix,
    read_chain_complex,
    parse_graph,
    parse_dimacs,
    read_graph,
    parse_gog,
]

ALPHABET = string.digits + string.ascii_lowercase + " -\n\t#=."


def _garbage(rng: random.Random) -> str:
    length = rng.randint(0, 120)
    return "".join(rng.choice(ALPHABET) for _ in range(length))


def _mangled_valid(rng: random.Random) -> str:
    seeds = [
        "2 1\n2 4\n",
        "3 2\n0 1\n1 2\n",
        "degrees 2\n1 2 1\n# boundary 1\n0 0\n# boundary 2\n0\n0\n",
        "vertex A rank=2\nvertex B rank=3\nedge A B finite\nacylindrical = true\n",
        "p edge 3 2\ne 1 2\ne 2 3\n",
    ]
    text = list(rng.choice(seeds))
    for _ in range(rng.randint(1, 5)):
        action = rng.randrange(3)
        if action == 0 and text:
            text.pop(rng.randrange(len(text)))
        elif action == 1:
            text.insert(rng.randrange(len(text) + 1), rng.choice(ALPHABET))
        elif text:
            text[rng.randrange(len(text))] = rng.choice(ALPHABET)
    return "".join(text)


@pytest.mark.parametrize("reader", READERS)
def test_fuzz_random_garbage(reader):
    rng = random.Random(20240)
    for _ in range(400):
        payload = _garbage(rng)
        try:
            reader(payload)
        except ParseError:
            pass


@pytest.mark.parametrize("reader", READERS)
def test_fuzz_mangled_valid_inputs(reader):
    rng = random.Random(20241)
    for _ in range(400):
        payload = _mangled_valid(rng)
        try:
            reader(payload)
        except ParseError:
            pass


def test_parse_errors_carry_line_numbers():
    rng = random.Random(20242)
    seen = 0
    for _ in range(200):
        payload = _mangled_valid(rng)
        for reader in READERS:
            try:
                reader(payload)
            except ParseError as exc:
                assert exc.line_number >= 1
                seen += 1
    assert seen > 100
