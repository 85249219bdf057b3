"""Kettle generator (Indoors)."""

PARAMS = {
    "size": 2.702,
    "detail": 3,
    "roughness": 0.041,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Kettle"
    for key, value in params.items():
        node[key] = value
    return node
