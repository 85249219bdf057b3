"""Mossy Stone Material generator (Materials)."""

PARAMS = {
    "size": 2.851,
    "detail": 2,
    "roughness": 0.096,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Mossy Stone Material"
    for key, value in params.items():
        node[key] = value
    return node
