"""Rolling Hills generator (Terrain)."""

PARAMS = {
    "size": 3.966,
    "detail": 2,
    "roughness": 0.202,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rolling Hills"
    for key, value in params.items():
        node[key] = value
    return node
