from wgraphs.parabolic import model_triples, phi
from wgraphs.wgraph import build_upsilon_with_module, build_with_module


def assert_upsilon_transport(G, family):
    """The direct graph equals the transported disjoint union of components.

    Checks the vertex bijection per model triple, equality of ascent
    sets, and equality of every weighted edge (including absences).
    """
    graph, _, _, vertices = build_with_module(G, family)
    triples = model_triples(G)
    placement = [phi(G, v, triples) for v in vertices]
    for t in triples:
        ug, umod, _ = build_upsilon_with_module(G, t, family)
        uindex = {lbl.key: k for k, lbl in enumerate(umod.basis.labels)}
        members = [i for i, (ti, _) in enumerate(placement) if ti.name == t.name]
        assert len(members) == len(ug), (G, family, t.name)
        for i in members:
            k = uindex[placement[i][1].key]
            assert graph.asc[i] == ug.asc[k], (G, family, t.name, graph.display[i])
        for i in members:
            ki = uindex[placement[i][1].key]
            for j in members:
                kj = uindex[placement[j][1].key]
                assert graph.weight(i, j) == ug.weight(ki, kj), (G, family, i, j)
    for (i, j) in graph.edges:
        assert placement[i][0].name == placement[j][0].name
