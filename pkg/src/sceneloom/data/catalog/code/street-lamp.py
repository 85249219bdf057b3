"""Street Lamp generator (Outdoors)."""

PARAMS = {
    "size": 1.69,
    "detail": 5,
    "roughness": 0.861,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Street Lamp"
    for key, value in params.items():
        node[key] = value
    return node
