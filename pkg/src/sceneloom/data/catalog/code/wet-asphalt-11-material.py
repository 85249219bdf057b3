"""Wet Asphalt 11 Material generator (Materials)."""

PARAMS = {
    "size": 0.655,
    "detail": 5,
    "roughness": 0.892,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 11 Material"
    for key, value in params.items():
        node[key] = value
    return node
