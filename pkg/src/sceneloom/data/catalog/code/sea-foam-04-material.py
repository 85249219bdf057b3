"""Sea Foam 04 Material generator (Materials)."""

PARAMS = {
    "size": 3.172,
    "detail": 2,
    "roughness": 0.661,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
