"""Canyon Wall generator (Terrain)."""

PARAMS = {
    "size": 2.147,
    "detail": 4,
    "roughness": 0.837,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Canyon Wall"
    for key, value in params.items():
        node[key] = value
    return node
