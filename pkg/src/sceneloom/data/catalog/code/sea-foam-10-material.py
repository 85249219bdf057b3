"""Sea Foam 10 Material generator (Materials)."""

PARAMS = {
    "size": 2.266,
    "detail": 4,
    "roughness": 0.393,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 10 Material"
    for key, value in params.items():
        node[key] = value
    return node
