"""Wet Asphalt 08 Material generator (Materials)."""

PARAMS = {
    "size": 3.702,
    "detail": 4,
    "roughness": 0.499,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 08 Material"
    for key, value in params.items():
        node[key] = value
    return node
