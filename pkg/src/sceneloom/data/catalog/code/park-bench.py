"""Park Bench generator (Outdoors)."""

PARAMS = {
    "size": 1.17,
    "detail": 5,
    "roughness": 0.14,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Park Bench"
    for key, value in params.items():
        node[key] = value
    return node
