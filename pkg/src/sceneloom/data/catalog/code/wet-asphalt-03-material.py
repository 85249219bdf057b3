"""Wet Asphalt 03 Material generator (Materials)."""

PARAMS = {
    "size": 2.035,
    "detail": 3,
    "roughness": 0.557,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 03 Material"
    for key, value in params.items():
        node[key] = value
    return node
