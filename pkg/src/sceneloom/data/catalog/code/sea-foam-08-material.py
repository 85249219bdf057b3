"""Sea Foam 08 Material generator (Materials)."""

PARAMS = {
    "size": 0.795,
    "detail": 2,
    "roughness": 0.337,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
