"""Rain Sheet generator (Weather)."""

PARAMS = {
    "size": 2.633,
    "detail": 4,
    "roughness": 0.458,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Rain Sheet"
    for key, value in params.items():
        node[key] = value
    return node
