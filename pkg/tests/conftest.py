import time

import pytest

from modlat import core, harness, lattice


@pytest.fixture(scope="session")
def builtin():
    return harness.builtin_corpus()


@pytest.fixture(scope="session")
def full_report(builtin):
    """Full corpus verification at jobs=1, with its wall time in seconds."""
    t0 = time.perf_counter()
    report = harness.run_verification(corpus=builtin, jobs=1)
    return report, time.perf_counter() - t0


@pytest.fixture(scope="session")
def full_report_jobs8(builtin):
    report = harness.run_verification(corpus=builtin, jobs=8)
    return report


@pytest.fixture(scope="session")
def z12():
    return core.cyclic_ring(12)


@pytest.fixture(scope="session")
def m12(z12):
    return core.regular_module(z12, "left")


@pytest.fixture(scope="session")
def tri2():
    return core.triangular_ring(core.cyclic_ring(2), 2)


@pytest.fixture(scope="session")
def mat2():
    return core.matrix_ring(core.cyclic_ring(2), 2)


def sub_of(module, members):
    mask = 0
    for x in members:
        mask |= 1 << x
    return core.Submodule(module, mask)


def gen_sub(module, gens):
    return lattice.generated_submodule(module, gens)
