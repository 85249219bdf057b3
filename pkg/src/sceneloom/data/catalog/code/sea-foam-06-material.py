"""Sea Foam 06 Material generator (Materials)."""

PARAMS = {
    "size": 0.267,
    "detail": 4,
    "roughness": 0.34,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
