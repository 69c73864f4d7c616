from tetrahedral.quiver import enumerate_paths, tetrahedral_quiver


def test_tetrahedral_quiver_shape():
    tq = tetrahedral_quiver()
    q = tq.quiver
    assert q.vertices == [1, 2, 3, 4, 5, 6]
    assert len(q.arrows) == 12
    for v in q.vertices:
        assert len(q.outgoing(v)) == 2 and len(q.incoming(v)) == 2


def test_f_orbits_are_the_four_triangles():
    tq = tetrahedral_quiver()
    orbits = {frozenset(o) for o in tq.orbits(tq.f)}
    assert orbits == {frozenset(("nu", "mu", "alpha")), frozenset(("delta", "eta", "gamma")),
                      frozenset(("omega", "beta", "rho")), frozenset(("epsilon", "xi", "sigma"))}
    for a, b in tq.f.items():
        assert tq.quiver.target(a) == tq.quiver.source(b)


def test_g_is_bar_after_f_and_consists_of_cycles():
    tq = tetrahedral_quiver()
    for a in tq.f:
        assert tq.g[a] == tq.bar[tq.f[a]]
        assert tq.quiver.target(a) == tq.quiver.source(tq.g[a])
    assert sorted(len(o) for o in tq.orbits(tq.g)) == [3, 3, 3, 3]


def test_path_composition_and_enumeration():
    q = tetrahedral_quiver().quiver
    p = q.path("delta", "eta", "gamma")
    assert (p.source, p.target, len(p)) == (1, 1, 3)
    assert q.concat(q.path("delta"), q.path("alpha")) is None
    assert sum(1 for _ in enumerate_paths(q, start=1, exact_len=4)) == 16
