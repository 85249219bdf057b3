"""Bus Stop generator (Outdoors)."""

PARAMS = {
    "size": 1.695,
    "detail": 1,
    "roughness": 0.712,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Bus Stop"
    for key, value in params.items():
        node[key] = value
    return node
