"""Sea Foam 07 Material generator (Materials)."""

PARAMS = {
    "size": 3.01,
    "detail": 2,
    "roughness": 0.205,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 07 Material"
    for key, value in params.items():
        node[key] = value
    return node
