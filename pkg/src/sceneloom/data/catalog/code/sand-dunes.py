"""Sand Dunes generator (Terrain)."""

PARAMS = {
    "size": 3.056,
    "detail": 1,
    "roughness": 0.12,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sand Dunes"
    for key, value in params.items():
        node[key] = value
    return node
