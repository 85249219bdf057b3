"""Wall Clock generator (Indoors)."""

PARAMS = {
    "size": 0.209,
    "detail": 2,
    "roughness": 0.092,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wall Clock"
    for key, value in params.items():
        node[key] = value
    return node
