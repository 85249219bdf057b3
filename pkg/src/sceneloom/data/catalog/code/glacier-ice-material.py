"""Glacier Ice Material generator (Materials)."""

PARAMS = {
    "size": 2.611,
    "detail": 5,
    "roughness": 0.148,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Glacier Ice Material"
    for key, value in params.items():
        node[key] = value
    return node
