"""Sea Foam 02 Material generator (Materials)."""

PARAMS = {
    "size": 3.838,
    "detail": 4,
    "roughness": 0.631,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 02 Material"
    for key, value in params.items():
        node[key] = value
    return node
