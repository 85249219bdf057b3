"""River Bed generator (Terrain)."""

PARAMS = {
    "size": 2.409,
    "detail": 3,
    "roughness": 0.754,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "River Bed"
    for key, value in params.items():
        node[key] = value
    return node
