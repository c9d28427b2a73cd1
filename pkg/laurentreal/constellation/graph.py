import networkx as nx

from laurentreal.constellation.constellation import ConstellationTuple

VERTEX_COLORS = {1: 'black', 2: 'white'}


def to_graph(c: ConstellationTuple) -> nx.MultiGraph:
    """Graph view of a constellation.

    For q=3 this is the bicolored map: one node per cycle of g_1 (black) and
    of g_2 (white), one edge per star. For q>3 every star becomes an
    auxiliary ``star`` node joined to the vertex of each color it touches.
    Nodes carry ``kind``, ``color`` and ``valency`` attributes; edges carry
    the ``star`` label (1-based).
    """
    graph = nx.MultiGraph()
    vertex_of = []
    for i, p in enumerate(c.rotations, start=1):
        index = {}
        for j, cycle in enumerate(p.cycles()):
            node = f'v{i}_{j + 1}'
            graph.add_node(node, kind='vertex', color=i, valency=len(cycle))
            for x in cycle:
                index[x] = node
        vertex_of.append(index)

    if c.q == 3:
        for x in range(c.n):
            graph.add_edge(vertex_of[0][x], vertex_of[1][x], star=x + 1)
        return graph

    for x in range(c.n):
        star = f's{x + 1}'
        graph.add_node(star, kind='star', color=0, valency=c.q - 1)
        for index in vertex_of:
            graph.add_edge(star, index[x], star=x + 1)

    return graph


def to_dot(c: ConstellationTuple) -> str:
    """DOT text of :func:`to_graph`; colors 1 and 2 are drawn black and white."""
    graph = to_graph(c)

    drawing = nx.MultiGraph(name='constellation')
    for node, data in graph.nodes(data=True):
        if data['kind'] == 'star':
            drawing.add_node(node, shape='point')
            continue
        fill = VERTEX_COLORS.get(data['color'], 'gray')
        drawing.add_node(node, label=data['valency'], style='filled', fillcolor=fill,
                         fontcolor='white' if fill == 'black' else 'black')
    for u, v, data in graph.edges(data=True):
        drawing.add_edge(u, v, label=data['star'])

    return nx.nx_pydot.to_pydot(drawing).to_string()
