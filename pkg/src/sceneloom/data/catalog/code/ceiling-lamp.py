"""Ceiling Lamp generator (Indoors)."""

PARAMS = {
    "size": 2.167,
    "detail": 4,
    "roughness": 0.836,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Ceiling Lamp"
    for key, value in params.items():
        node[key] = value
    return node
