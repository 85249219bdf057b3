"""Sea Foam Material generator (Materials)."""

PARAMS = {
    "size": 0.997,
    "detail": 4,
    "roughness": 0.926,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam Material"
    for key, value in params.items():
        node[key] = value
    return node
