"""Sink generator (Indoors)."""

PARAMS = {
    "size": 3.64,
    "detail": 1,
    "roughness": 0.805,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Sink"
    for key, value in params.items():
        node[key] = value
    return node
