import typeb


def test_parse_format_roundtrip():
    p = typeb.parse("{0,4|1,-8|2,7|3,6,-9|5}")
    assert str(p) == "{0,4|1,-8|2,7|3,6,-9|5}"
    assert p.n == 9
    assert p.zero_block == [4]
    assert len(p.blocks) == 4


def test_enumeration_counts():
    assert len(typeb.enumerate_class(3, "no_zero")) == 11
    assert len(typeb.enumerate_class(5, "all")) == 648


def test_stats():
    st = typeb.stats(typeb.parse("{1,-10|2,5|3,4|6,-7,-8|9}"))
    assert st["mb_set"] == [6, 9]
    assert st["succ_set"] == [4, 8]


def test_sequences_and_tables():
    assert typeb.sequence("w", 7) == [1, 1, 3, 11, 49, 257, 1539, 10299]
    assert typeb.sequence("dowling", 7)[-1] == 28640
    d = typeb.table("d", 4)
    assert d[4] == [1, 11, 11, 1]


def test_bijection_maps_and_reports():
    p = typeb.parse("{0,3,6|1,-7,9|2|4|5,8,-10|11}")
    q = typeb.apply_map("f", p)
    assert str(q) == "{1,-8,10|2,3,-4,5,9,-11|6,-7,12}"
    assert typeb.apply_map("f", q, inverse=True) == p
    rep = typeb.verify_bijection("f", 4)
    assert rep["ok"]


def test_polynomials_and_certificates():
    assert typeb.poly("P_ms", 5) == [0, 1, 36, 12]
    cert = typeb.certify_real_rooted(["0", "2", "1"])  # x^2 + 2x
    assert cert["real_rooted"]
    inter = typeb.certify_interleaves(["0", "1", "2"], ["0", "1", "10"])
    assert inter["holds"]
    assert typeb.gamma_vector(["1", "11", "11", "1"], 3) == [1, 8]


def test_flatten_and_words():
    perm = typeb.flatten(typeb.parse("{1,-8|2,4,7|3,6,-9|5}"))
    assert perm == "1 -8 2 4 7 3 6 -9 5"
    st = typeb.perm_stats("1 3 -7 2 6 4 5 -9 8")
    assert st["des"] == 3
    w = typeb.partition_to_word(typeb.parse("{1,-6,7|2,3,-4,8,-9,-10|5,-11,12}"))
    assert typeb.classify_word(w) == "flattened_stirling"
    assert typeb.word_to_partition(w) == typeb.parse("{1,-6,7|2,3,-4,8,-9,-10|5,-11,12}")


def test_orbits_and_homomesy():
    rep = typeb.orbits_summary(5)
    assert rep["ok"]
    assert rep["expected_orbit_count"] == "15"
    assert typeb.homomesy(5)["ok"]


def test_oeis():
    rep = typeb.oeis_check("A004211", [str(v) for v in typeb.sequence("w", 7)])
    assert rep["ok"]
