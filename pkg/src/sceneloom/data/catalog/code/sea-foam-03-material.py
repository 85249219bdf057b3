"""Sea Foam 03 Material generator (Materials)."""

PARAMS = {
    "size": 3.182,
    "detail": 2,
    "roughness": 0.711,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sea Foam 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
