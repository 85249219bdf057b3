"""Window Frame generator (Indoors)."""

PARAMS = {
    "size": 3.011,
    "detail": 2,
    "roughness": 0.445,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Window Frame"
    for key, value in params.items():
        node[key] = value
    return node
