"""Wet Asphalt 06 Material generator (Materials)."""

PARAMS = {
    "size": 2.455,
    "detail": 4,
    "roughness": 0.55,
}


def build(nt, params=PARAMS):
    node = nt.nodes.new("GeometryNodeGroup")
    node.label = "Wet Asphalt 06 Material"
    for key, value in params.items():
        node[key] = value
    return node
