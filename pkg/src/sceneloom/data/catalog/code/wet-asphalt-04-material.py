"""Wet Asphalt 04 Material generator (Materials)."""

PARAMS = {
    "size": 3.361,
    "detail": 2,
    "roughness": 0.966,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 04 Material"
    for key, value in params.items():
        node[key] = value
    return node
