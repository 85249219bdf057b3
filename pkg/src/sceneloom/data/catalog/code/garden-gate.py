"""Garden Gate generator (Outdoors)."""

PARAMS = {
    "size": 1.785,
    "detail": 4,
    "roughness": 0.925,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Garden Gate"
    for key, value in params.items():
        node[key] = value
    return node
