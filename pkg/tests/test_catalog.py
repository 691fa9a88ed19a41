import numpy as np
import pytest

from zklat import catalog
from zklat.codes import is_self_dual, min_euclidean_weight
from zklat.errors import UnknownId
from zklat.lattice import Lattice
from zklat.skew import SkewSeed


def test_every_code_entry_is_self_dual():
    # self-duality doubles as a transcription checksum for the whole table
    for cid in catalog.catalog_list("code"):
        code = catalog.build(cid)
        assert is_self_dual(code), cid


def test_every_seed_entry_validates():
    for sid in catalog.catalog_list("skew_seed"):
        seed = catalog.build(sid)
        assert isinstance(seed, SkewSeed)
        m = seed.np_matrix()
        assert np.array_equal(m.T, -m)
        assert np.array_equal(m @ m.T, seed.m * np.eye(m.shape[0], dtype=np.int64))


def test_small_lattices_unimodular_and_odd():
    for lid in ["D12_plus", "D8_2", "D4_5", "A5_4", "D20"]:
        lat = catalog.build(lid)
        assert isinstance(lat, Lattice)
        assert lat.is_unimodular() and not lat.is_even()


def test_expected_weights_on_cheap_codes():
    for cid in ["C_13_12", "C_23_12"]:
        entry = catalog.catalog_get(cid)
        assert min_euclidean_weight(catalog.build(cid)) == entry.expected["d_E"]


def test_build_is_cached():
    assert catalog.build("D4_5") is catalog.build("D4_5")


def test_unknown_ids_raise():
    with pytest.raises(UnknownId):
        catalog.catalog_get("no_such_entry")
    with pytest.raises(UnknownId):
        catalog.lattice_info("C_13_12")  # a code id, not a lattice id


def test_lattice_info_fields():
    info = catalog.lattice_info("D4_5")
    assert info.model_code == "C_20_3_D10"
    assert info.min_norm == 2 and info.case == "a"
    assert 5 in info.direct_codes


def test_frame_report_yes_via_direct_code():
    v = catalog.frame_report("D4_5", 5)
    assert v.status == "yes" and any("C_5_20" in line for line in v.chain)


def test_frame_report_no_below_min_norm():
    v = catalog.frame_report("R28_32", 2)
    assert v.status == "no" and "minimum norm" in v.chain[0]


def test_frame_report_no_via_vector_count():
    v = catalog.frame_report("D20", 3)
    assert v.status == "no" and "fewer than" in v.chain[0]


def test_frame_report_unknown_out_of_reach():
    v = catalog.frame_report("L48", 17)
    assert v.status == "unknown"
