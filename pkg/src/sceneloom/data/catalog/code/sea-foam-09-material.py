"""Sea Foam 09 Material generator (Materials)."""

PARAMS = {
    "size": 1.643,
    "detail": 5,
    "roughness": 0.765,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 09 Material"
    for key, value in params.items():
        node[key] = value
    return node
